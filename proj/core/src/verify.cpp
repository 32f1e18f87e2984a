#include "raag/verify.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace raag {

using nlohmann::json;

namespace {

struct Checker {
  const SimplicialGraph& g;
  std::vector<std::string> problems;

  void fail(const std::string& what) { problems.push_back(what); }

  std::optional<VertexIndex> vertex(const json& name) {
    if (!name.is_string()) {
      fail("vertex name is not a string");
      return std::nullopt;
    }
    auto v = g.find(name.get<std::string>());
    if (!v) fail("unknown vertex " + name.get<std::string>());
    return v;
  }

  VertexSet set(const json& names) {
    VertexSet s;
    if (!names.is_array()) {
      fail("vertex list is not an array");
      return s;
    }
    for (const auto& n : names)
      if (auto v = vertex(n)) s.insert(*v);
    return s;
  }

  std::vector<VertexSet> complement_components(const VertexSet& removed) {
    return connected_components(g, g.vertices() - removed);
  }

  bool sil(VertexIndex a, VertexIndex b) {
    if (a == b || g.adjacent(a, b)) return false;
    for (const auto& c : complement_components(link(g, a) & link(g, b)))
      if (!c.contains(a) && !c.contains(b)) return true;
    return false;
  }

  bool separated(VertexIndex a, VertexIndex b) {
    return !component_containing(g, g.vertices() - (link(g, a) & link(g, b)), a).contains(b);
  }

  bool nontrivial_pc(VertexIndex v, const VertexSet& support) {
    const auto comps = complement_components(star(g, v));
    return comps.size() >= 2 && std::find(comps.begin(), comps.end(), support) != comps.end();
  }

  struct Pc {
    VertexIndex v;
    VertexSet support;
  };

  std::vector<Pc> pcs(const json& list) {
    std::vector<Pc> out;
    if (!list.is_array()) {
      fail("generator list is not an array");
      return out;
    }
    for (const auto& p : list) {
      auto v = vertex(p.at("vertex"));
      if (!v) continue;
      VertexSet s = set(p.at("support"));
      if (!nontrivial_pc(*v, s)) fail("not a nontrivial partial conjugation: " + p.at("name").get<std::string>());
      out.push_back({*v, s});
    }
    return out;
  }

  struct System {
    std::vector<VertexIndex> pivots;
    VertexSet core;
    std::vector<VertexSet> shared;
    std::vector<VertexSet> additional;
  };

  System system(const json& j) {
    System s;
    for (const auto& n : j.at("pivots"))
      if (auto v = vertex(n)) s.pivots.push_back(*v);
    s.core = set(j.at("core"));
    for (const auto& c : j.at("shared_components")) s.shared.push_back(set(c));
    for (const auto& c : j.at("additional_components")) s.additional.push_back(set(c));

    if (s.pivots.size() < 2) fail("system has fewer than two pivots");
    VertexSet pivot_set;
    for (VertexIndex w : s.pivots) pivot_set.insert(w);
    if (pivot_set.size() != s.pivots.size()) fail("repeated pivot");

    VertexSet common = g.vertices();
    for (VertexIndex w : s.pivots) common &= link(g, w);
    if (common != s.core) fail("core is not the common link of the pivots");

    for (std::size_t j = 0; j < s.pivots.size(); ++j)
      for (std::size_t k = j + 1; k < s.pivots.size(); ++k) {
        if (!sil(s.pivots[j], s.pivots[k])) fail("pivots do not form a SIL-pair");
        if ((link(g, s.pivots[j]) & link(g, s.pivots[k])) != s.core) fail("pivot pair link differs from core");
      }

    for (VertexIndex a = 0; a < g.order(); ++a)
      for (VertexIndex b = a + 1; b < g.order(); ++b)
        if (sil(a, b) && separated(a, b) && (link(g, a) & link(g, b)).size() < s.core.size())
          fail("a separated SIL-pair has a smaller common link");

    const auto comps = complement_components(s.core);
    std::set<VertexSet> expected_additional;
    for (const auto& c : comps) {
      const VertexSet hits = c & pivot_set;
      if (hits.size() > 1) fail("a component of the core complement holds two pivots");
      if (hits.empty()) {
        expected_additional.insert(c);
        for (VertexIndex v : c)
          for (VertexIndex w : s.pivots)
            if (sil(v, w)) fail("additional-component vertex forms a SIL-pair with a pivot");
      }
    }
    if (s.shared.size() != s.pivots.size()) fail("shared component count differs from pivot count");
    for (std::size_t i = 0; i < std::min(s.shared.size(), s.pivots.size()); ++i)
      if (s.shared[i] != component_containing(g, g.vertices() - s.core, s.pivots[i]))
        fail("shared component does not match its pivot");
    if (std::set<VertexSet>(s.additional.begin(), s.additional.end()) != expected_additional ||
        s.additional.size() != expected_additional.size())
      fail("additional components do not match");
    return s;
  }

  std::optional<std::size_t> shared_index(const System& s, VertexIndex v) {
    for (std::size_t i = 0; i < s.shared.size(); ++i)
      if (s.shared[i].contains(v)) return i;
    return std::nullopt;
  }

  bool core_in_link(const System& s, VertexIndex v) { return s.core.is_subset_of(link(g, v)); }

  // (v, C) with v in C_i, core in lk(v), C inside C_i holding a vertex whose link has the core
  bool subordinate(const System& s, VertexIndex v, const VertexSet& c) {
    auto i = shared_index(s, v);
    if (!i || !core_in_link(s, v) || !c.is_subset_of(s.shared[*i])) return false;
    for (VertexIndex w : c)
      if (core_in_link(s, w)) return true;
    return false;
  }

  bool dominant(const System& s, VertexIndex v, const VertexSet& c) {
    auto i = shared_index(s, v);
    if (!i || !core_in_link(s, v)) return false;
    for (std::size_t k = 0; k < s.shared.size(); ++k)
      if (k != *i && c == s.shared[k]) return true;
    return false;
  }

  std::vector<Pc> all_nontrivial() {
    std::vector<Pc> out;
    for (VertexIndex v = 0; v < g.order(); ++v) {
      const auto comps = complement_components(star(g, v));
      if (comps.size() >= 2)
        for (const auto& c : comps) out.push_back({v, c});
    }
    return out;
  }

  bool defines_subordinate(const System& s, VertexIndex v) {
    for (const auto& c : complement_components(star(g, v)))
      if (nontrivial_pc(v, c) && subordinate(s, v, c)) return true;
    return false;
  }

  // every C_i vertex: connected complement, or core in link with only dominant
  // and subordinate pcs, at least one subordinate, each support witnessed
  void vertex_hypothesis(const System& s) {
    for (const auto& ci : s.shared)
      for (VertexIndex v : ci) {
        const auto comps = complement_components(star(g, v));
        if (comps.size() < 2) continue;
        bool any_sub = false;
        for (const auto& c : comps) {
          if (dominant(s, v, c)) continue;
          if (!subordinate(s, v, c)) {
            fail("vertex " + g.name(v) + " defines a pc that is neither dominant nor subordinate");
            continue;
          }
          any_sub = true;
          bool witnessed = false;
          for (VertexIndex x : c) witnessed = witnessed || defines_subordinate(s, x);
          if (!witnessed) fail("subordinate support of " + g.name(v) + " has no subordinate-defining vertex");
        }
        if (!any_sub) fail("vertex " + g.name(v) + " defines no subordinate pc");
      }
  }

  std::vector<std::pair<VertexIndex, VertexIndex>> order_pairs_def() {
    std::vector<std::pair<VertexIndex, VertexIndex>> out;
    for (VertexIndex v = 0; v < g.order(); ++v)
      for (VertexIndex w = 0; w < g.order(); ++w)
        if (v != w && link(g, v).is_subset_of(star(g, w))) out.emplace_back(v, w);
    return out;
  }

  bool any_sil() {
    for (VertexIndex a = 0; a < g.order(); ++a)
      for (VertexIndex b = a + 1; b < g.order(); ++b)
        if (sil(a, b)) return true;
    return false;
  }

  bool g_empty(const System& s) {
    for (VertexIndex v : s.core)
      if (complement_components(star(g, v)).size() >= 2) return false;
    return true;
  }

  void expect(const json& dec, const char* key, const std::string& value) {
    if (dec.at(key).get<std::string>() != value) fail(std::string(key) + " should be " + value);
  }

  void check_no_sil(const json& dec) {
    const json& cert = dec.at("certificate");
    if (any_sil()) fail("graph has a SIL-pair");
    const auto pairs = order_pairs_def();
    std::vector<std::pair<VertexIndex, VertexIndex>> listed;
    for (const auto& p : cert.at("order_pairs")) {
      auto a = vertex(p.at(0));
      auto b = vertex(p.at(1));
      if (a && b) listed.emplace_back(*a, *b);
    }
    std::sort(listed.begin(), listed.end());
    if (listed != pairs) fail("order pairs differ from recomputation");
    bool all_connected = true;
    for (VertexIndex v = 0; v < g.order(); ++v)
      all_connected = all_connected && complement_components(star(g, v)).size() <= 1;
    if (all_connected != cert.at("disconnected_complements").empty()) fail("disconnected complement list is wrong");
    const bool single = pairs.size() == 2 && pairs[0].first == pairs[1].second && pairs[0].second == pairs[1].first;
    expect(dec, "out_status", single && all_connected ? "yes" : "no");
  }

  void check_connected_sil_only(const json& dec) {
    if (!any_sil()) fail("no SIL-pair");
    for (VertexIndex a = 0; a < g.order(); ++a)
      for (VertexIndex b = a + 1; b < g.order(); ++b)
        if (sil(a, b) && separated(a, b)) fail("a separated SIL-pair exists");
    expect(dec, "out_status", "unknown");
  }

  void check_core_singleton(const json& dec) {
    const json& cert = dec.at("certificate");
    const System s = system(cert.at("system"));
    if (s.core.size() != 1) fail("core is not a single vertex");
    if (!is_connected(g)) fail("graph is disconnected");
    const json& gens = cert.at("ker_p_generators");
    if (gens.empty()) fail("no ker P witnesses");
    for (const auto& k : gens) {
      if (k.at("kind") == "leaf_transvection") {
        auto v = vertex(k.at("moved"));
        auto w = vertex(k.at("by"));
        if (!v || !w) continue;
        // w maximal in lk(v), unique such, and lk(v) in st(w)
        auto leq_def = [&](VertexIndex x, VertexIndex y) { return link(g, x).is_subset_of(star(g, y)); };
        auto maximal = [&](VertexIndex x) {
          for (VertexIndex y = 0; y < g.order(); ++y)
            if (y != x && leq_def(x, y) && !leq_def(y, x)) return false;
          return true;
        };
        std::size_t count = 0;
        for (VertexIndex x : link(g, *v)) count += maximal(x) ? 1 : 0;
        if (!g.adjacent(*v, *w) || !maximal(*w) || count != 1 || !leq_def(*v, *w)) fail("invalid leaf transvection");
      } else {
        auto v = vertex(k.at("vertex"));
        if (!v) continue;
        const VertexSet comp = set(k.at("component"));
        const VertexSet st = star(g, *v);
        // closure of comp under edges not inside st(v)
        VertexSet closure = VertexSet::singleton(comp.front());
        bool grew = true;
        while (grew) {
          grew = false;
          for (VertexIndex x : closure)
            for (VertexIndex y : link(g, x))
              if (!(st.contains(x) && st.contains(y)) && !closure.contains(y)) {
                closure.insert(y);
                grew = true;
              }
        }
        if (closure != comp || comp.is_subset_of(st)) fail("invalid v-hat component conjugation");
      }
    }
    expect(dec, "out_status", "no");
  }

  void check_withaddcpnts(const json& dec) {
    const json& cert = dec.at("certificate");
    const System s = system(cert.at("system"));
    if (s.additional.size() < 2) fail("fewer than two additional components");
    VertexSet lambda;
    for (VertexIndex v = 0; v < g.order(); ++v)
      if (core_in_link(s, v)) lambda.insert(v);
    if (set(cert.at("lambda_vertices")) != lambda) fail("Lambda vertex set is wrong");
    const json& factors = cert.at("factors");
    if (factors.size() != s.additional.size()) fail("one factor per additional component expected");
    std::vector<std::vector<Pc>> lists;
    for (std::size_t j = 0; j < factors.size() && j < s.additional.size(); ++j) {
      lists.push_back(pcs(factors[j]));
      VertexSet seen;
      for (const auto& p : lists.back()) {
        if (p.support != s.additional[j]) fail("factor generator has the wrong support");
        seen.insert(p.v);
      }
      if (seen != lambda) fail("factor is not indexed by Lambda");
    }
    for (std::size_t j = 0; j < lists.size(); ++j)
      for (std::size_t k = j + 1; k < lists.size(); ++k)
        for (const auto& p : lists[j])
          for (const auto& q : lists[k]) {
            const bool rel1 = p.v == q.v || g.adjacent(p.v, q.v);
            const bool rel2 = !p.support.intersects(q.support) && !p.support.contains(q.v) && !q.support.contains(p.v);
            if (!rel1 && !rel2) fail("factor generators do not commute");
          }
    expect(dec, "out_status", "no");
  }

  void check_one_additional(const json& dec) {
    const System s = system(dec.at("certificate").at("system"));
    if (s.additional.size() != 1) fail("expected exactly one additional component");
    expect(dec, "out_status", "unknown");
  }

  void check_structure(const json& dec) {
    const json& cert = dec.at("certificate");
    const System s = system(cert.at("system"));
    if (!s.additional.empty()) fail("additional components present");
    for (const auto& p : all_nontrivial())
      if (subordinate(s, p.v, p.support)) fail("a subordinate partial conjugation exists");
    const json& f = cert.at("report").at("factors");
    const auto n1 = pcs(f.at("N1"));
    const auto n2 = pcs(f.at("N2"));
    const auto excluded = pcs(cert.at("excluded_dominants"));
    for (const auto& p : n1)
      if (!dominant(s, p.v, p.support)) fail("N1 holds a non-dominant generator");
    for (const auto& p : n2)
      if (dominant(s, p.v, p.support)) fail("N2 holds a dominant generator");
    for (const auto& p : excluded) {
      const auto i = shared_index(s, p.v);
      const bool ok = i && dominant(s, p.v, p.support) &&
                      ((*i == 0 && p.support == s.shared.at(1)) || (*i != 0 && p.support == s.shared.at(0)));
      if (!ok) fail("wrongly excluded dominant");
    }
    if (n1.size() + n2.size() + excluded.size() != all_nontrivial().size()) fail("factors do not cover the generators");
    const bool both = !n1.empty() && !n2.empty();
    const bool transvections = !order_pairs_def().empty();
    expect(dec, "pso_status", both ? "no" : "unknown");
    expect(dec, "out_status", both && !transvections ? "no" : "unknown");
  }

  void check_semidirect_common(const System& s) {
    if (!s.additional.empty()) fail("additional components present");
    if (s.pivots.size() < 3) fail("fewer than three shared components");
    vertex_hypothesis(s);
  }

  void check_being_ah(const json& dec) {
    const System s = system(dec.at("certificate").at("system"));
    check_semidirect_common(s);
    if (s.pivots.size() != 3) fail("corollary needs exactly three shared components");
    if (!g_empty(s)) fail("core vertices define nontrivial partial conjugations");
    for (const auto& p : all_nontrivial()) {
      if (!subordinate(s, p.v, p.support)) continue;
      const VertexSet& ci = s.shared[*shared_index(s, p.v)];
      for (VertexIndex x : ci)
        if (x != p.v && defines_subordinate(s, x) && !p.support.contains(x))
          fail("subordinate support misses a subordinate-defining vertex");
    }
    expect(dec, "pso_status", "yes");
  }

  void check_semidirect(const json& dec) {
    const json& cert = dec.at("certificate");
    const System s = system(cert.at("system"));
    check_semidirect_common(s);
    const auto gs = pcs(cert.at("report").at("factors").at("G"));
    if (gs.empty() || g_empty(s)) fail("G has no generators");
    for (const auto& p : gs)
      if (!s.core.contains(p.v)) fail("G generator not defined by a core vertex");
    expect(dec, "pso_status", "no");
    expect(dec, "out_status", order_pairs_def().empty() ? "no" : "unknown");
  }
};

}  // namespace

std::vector<std::string> verify_decision(const SimplicialGraph& g, const json& decision) {
  Checker c{g, {}};
  try {
    const std::string rule = decision.at("rule").get<std::string>();
    if (rule == "no_sil")
      c.check_no_sil(decision);
    else if (rule == "connected_sil_only")
      c.check_connected_sil_only(decision);
    else if (rule == "core_singleton")
      c.check_core_singleton(decision);
    else if (rule == "withaddcpnts")
      c.check_withaddcpnts(decision);
    else if (rule == "one_additional_component")
      c.check_one_additional(decision);
    else if (rule == "structureofPSO")
      c.check_structure(decision);
    else if (rule == "beingAHcor")
      c.check_being_ah(decision);
    else if (rule == "semidirect")
      c.check_semidirect(decision);
    else if (rule == "undecided")
      c.expect(decision, "out_status", "unknown");
    else
      c.fail("unknown rule " + rule);
  } catch (const json::exception& e) {
    c.fail(std::string("malformed certificate: ") + e.what());
  }
  return c.problems;
}

}  // namespace raag
