#include "raag/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "raag/errors.hpp"

namespace raag {

GroupWord::GroupWord(std::initializer_list<Letter> letters) {
  for (const Letter& l : letters) push_back(l);
}

GroupWord GroupWord::generator(std::size_t id, int exp) {
  GroupWord w;
  w.push_back({id, exp});
  return w;
}

void GroupWord::push_back(Letter l) {
  if (l.exp != 1 && l.exp != -1) throw InputError("letter exponent must be +1 or -1");
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

GroupWord& GroupWord::operator*=(const GroupWord& other) {
  for (const Letter& l : other.letters_) push_back(l);
  return *this;
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) { return a * b * a.inverse() * b.inverse(); }

GeneratorTable::GeneratorTable(SimplicialGraph g) : graph_(std::move(g)), pcs_(nontrivial_pcs(graph_)) {}

std::optional<std::size_t> GeneratorTable::find(VertexIndex v, const VertexSet& support) const {
  for (std::size_t i = 0; i < pcs_.size(); ++i)
    if (pcs_[i].vertex == v && pcs_[i].support == support) return i;
  return std::nullopt;
}

std::size_t GeneratorTable::id_of(const PartialConjugation& p) const {
  auto id = find(p.vertex, p.support);
  if (!id || pcs_[*id] != p) throw InputError("not a generator: " + pc_name(graph_, p));
  return *id;
}

GroupWord GeneratorTable::word(VertexIndex v, const VertexSet& support, int exp) const {
  auto id = find(v, support);
  if (!id) throw InputError(format_set(graph_, support) + " is not a nontrivial support of " + graph_.name(v));
  return GroupWord::generator(*id, exp);
}

std::string GeneratorTable::format(const GroupWord& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += name(l.gen) + "^" + std::to_string(l.exp);
  }
  return out;
}

PsoPresentation pso_presentation(const SimplicialGraph& g) {
  PsoPresentation p{GeneratorTable(g), {}};
  const auto& pcs = p.generators.pcs();
  std::vector<Relation> by_family[6];

  for (std::size_t i = 0; i < pcs.size(); ++i) {
    for (std::size_t j = i + 1; j < pcs.size(); ++j) {
      const auto& pv = pcs[i];
      const auto& pw = pcs[j];
      const VertexIndex v = pv.vertex;
      const VertexIndex w = pw.vertex;
      const VertexSet& c = pv.support;
      const VertexSet& d = pw.support;
      int family = 0;
      if (v == w || g.adjacent(v, w)) {
        family = 1;
      } else if (!c.intersects(d) && !c.contains(w) && !d.contains(v)) {
        family = 2;
      } else if ((c | VertexSet::singleton(v)).is_subset_of(d) || (d | VertexSet::singleton(w)).is_subset_of(c)) {
        family = 3;
      }
      if (family != 0)
        by_family[family].push_back({family, commutator(GroupWord::generator(i), GroupWord::generator(j))});
    }
  }

  // [P_v^C P_v^D, P_w^D] with w in C and D a component for both v and w
  for (std::size_t i = 0; i < pcs.size(); ++i) {
    for (std::size_t k = 0; k < pcs.size(); ++k) {
      const auto& pvc = pcs[i];
      const auto& pvd = pcs[k];
      if (k == i || pvd.vertex != pvc.vertex) continue;
      for (std::size_t j = 0; j < pcs.size(); ++j) {
        const auto& pwd = pcs[j];
        if (pwd.vertex == pvc.vertex || pwd.support != pvd.support || !pvc.support.contains(pwd.vertex)) continue;
        by_family[4].push_back(
            {4, commutator(GroupWord::generator(i) * GroupWord::generator(k), GroupWord::generator(j))});
      }
    }
  }

  for (std::size_t i = 0; i < pcs.size();) {
    std::size_t j = i;
    GroupWord product;
    while (j < pcs.size() && pcs[j].vertex == pcs[i].vertex) product.push_back({j++, 1});
    by_family[5].push_back({5, product});
    i = j;
  }

  for (int f = 1; f <= 5; ++f)
    for (auto& r : by_family[f]) p.relations.push_back(std::move(r));
  return p;
}

TietzeView tietze_view(const PsoPresentation& p, const std::vector<std::size_t>& eliminate) {
  const auto& table = p.generators;
  std::map<std::size_t, GroupWord> substitution;
  std::set<VertexIndex> used_vertices;
  for (std::size_t id : eliminate) {
    const auto& pc = table.at(id);
    if (!used_vertices.insert(pc.vertex).second)
      throw InputError("at most one generator per vertex can be eliminated");
    // P_i = (P_{i+1} ... P_k P_1 ... P_{i-1})^{-1}
    std::vector<std::size_t> same;
    for (std::size_t j = 0; j < table.size(); ++j)
      if (table.at(j).vertex == pc.vertex) same.push_back(j);
    const auto pos = static_cast<std::size_t>(std::find(same.begin(), same.end(), id) - same.begin());
    GroupWord rest;
    for (std::size_t s = 1; s < same.size(); ++s) rest.push_back({same[(pos + s) % same.size()], 1});
    substitution[id] = rest.inverse();
  }

  TietzeView view;
  for (std::size_t id = 0; id < table.size(); ++id) {
    if (substitution.count(id) != 0)
      view.eliminated.push_back(id);
    else
      view.kept.push_back(id);
  }
  for (const auto& r : p.relations) {
    if (r.family == 5 && !r.word.empty() && used_vertices.count(table.at(r.word.letters().front().gen).vertex) != 0)
      continue;
    GroupWord w;
    for (const Letter& l : r.word.letters()) {
      auto it = substitution.find(l.gen);
      if (it == substitution.end())
        w.push_back(l);
      else
        w *= l.exp > 0 ? it->second : it->second.inverse();
    }
    view.relations.push_back({r.family, w});
  }
  return view;
}

std::vector<PartialConjugation> excluded_dominants(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  std::vector<PartialConjugation> out;
  if (d.pivot_count() < 2) return out;
  for (auto& p : dominant_pcs(g, d)) {
    const std::size_t i = *d.shared_index_of(p.vertex);
    if ((i == 0 && p.support == d.shared_components[1]) || (i != 0 && p.support == d.shared_components[0]))
      out.push_back(std::move(p));
  }
  return out;
}

const std::vector<PartialConjugation>& DecompositionReport::factor(const std::string& name) const {
  for (const auto& f : factors)
    if (f.name == name) return f.pcs;
  throw InputError("no factor named " + name);
}

bool DecompositionReport::flag(const std::string& name) const {
  for (const auto& [k, v] : flags)
    if (k == name) return v;
  throw InputError("no flag named " + name);
}

DecompositionReport n1n2_report(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  if (!d.additional_components.empty()) throw PreconditionError("system has additional components");
  if (!subordinate_pcs(g, d).empty()) throw PreconditionError("nontrivial subordinate partial conjugations exist");
  const auto excluded = excluded_dominants(g, d);
  DecompositionReport r{DecompositionReport::Kind::kN1N2, {{"N1", {}}, {"N2", {}}}, {}};
  for (auto& p : nontrivial_pcs(g)) {
    if (classify_pc(g, d, p) == PCType::kType1) {
      if (std::find(excluded.begin(), excluded.end(), p) == excluded.end()) r.factors[0].pcs.push_back(std::move(p));
    } else {
      r.factors[1].pcs.push_back(std::move(p));
    }
  }
  r.flags = {{"n1_nonempty", !r.factors[0].pcs.empty()}, {"n2_nonempty", !r.factors[1].pcs.empty()}};
  return r;
}

std::optional<std::string> semidirect_vertex_violation(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  const VertexSet& core = d.core();
  auto defines_subordinate = [&](VertexIndex v) {
    for (const auto& p : enumerate_pcs(g))
      if (p.vertex == v && classify_pc(g, d, p) == PCType::kType3) return true;
    return false;
  };
  for (const auto& ci : d.shared_components) {
    for (VertexIndex v : ci) {
      const auto comps = star_complement_components(g, v);
      if (comps.size() <= 1) continue;
      const std::string who = "vertex " + g.name(v) + ": ";
      if (!core.is_subset_of(g.neighbors(v))) return who + "disconnected star complement and core not in its link";
      bool has_subordinate = false;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        const PartialConjugation p{v, comps[k], k + 1, false};
        const PCType t = classify_pc(g, d, p);
        if (t == PCType::kType1) continue;
        if (t != PCType::kType3) return who + "defines a partial conjugation of type " + pc_type_label(t);
        has_subordinate = true;
        bool witnessed = false;
        for (VertexIndex x : comps[k]) witnessed = witnessed || defines_subordinate(x);
        if (!witnessed) return who + "subordinate support " + format_set(g, comps[k]) + " has no subordinate-defining vertex";
      }
      if (!has_subordinate) return who + "disconnected star complement without subordinate partial conjugations";
    }
  }
  return std::nullopt;
}

DecompositionReport semidirect_report(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  const std::size_t n = d.pivot_count();
  if (n < 3) throw PreconditionError("fewer than three simultaneously shared components");
  if (!d.additional_components.empty()) throw PreconditionError("system has additional components");
  if (auto bad = semidirect_vertex_violation(g, d)) throw PreconditionError(*bad);

  const VertexSet& core = d.core();
  DecompositionReport r{DecompositionReport::Kind::kSemidirect, {}, {}};
  NamedGeneratorList gfac{"G", {}};
  for (auto& p : nontrivial_pcs(g))
    if (core.contains(p.vertex)) gfac.pcs.push_back(std::move(p));
  r.flags = {{"g_nonempty", !gfac.pcs.empty()}};
  r.factors.push_back(std::move(gfac));

  const auto dominants = dominant_pcs(g, d);
  for (std::size_t k = 2; k < n; ++k) {  // H_{k+1}, 0-based component k
    NamedGeneratorList h{"H_" + std::to_string(k + 1), {}};
    for (const auto& p : dominants) {
      const std::size_t j = *d.shared_index_of(p.vertex);
      const bool into_k = p.support == d.shared_components[k] && j < k;
      bool from_k = false;
      if (j == k)
        for (std::size_t jj = 1; jj < k; ++jj) from_k = from_k || p.support == d.shared_components[jj];
      if (into_k || from_k) h.pcs.push_back(p);
    }
    r.factors.push_back(std::move(h));
  }
  r.factors.push_back({"K", subordinate_pcs(g, d)});
  return r;
}

namespace {

GroupWord conj_by(const GroupWord& c, const GroupWord& x) { return c * x * c.inverse(); }

void require_exp(int exp) {
  if (exp != 1 && exp != -1) throw InputError("exponent must be +1 or -1");
}

}  // namespace

GroupWord conjugate_pc(const GeneratorTable& table, const PartialConjugation& conjugator,
                       const PartialConjugation& target, int exp) {
  require_exp(exp);
  const SimplicialGraph& g = table.graph();
  table.id_of(conjugator);
  const GroupWord t = GroupWord::generator(table.id_of(target));
  if (commutes(g, conjugator, target)) return t;

  const VertexIndex a = conjugator.vertex;
  const VertexIndex b = target.vertex;
  const auto cls = classify_pair(g, a, b);
  const VertexSet& x = conjugator.support;
  const VertexSet& y = target.support;
  const ComponentRole rx = component_role(cls, a, x);
  const ComponentRole ry = component_role(cls, b, y);
  const GroupWord pau = table.word(a, cls.dominating_a);

  if (rx == ComponentRole::kShared && ry == ComponentRole::kShared) {
    // identical shared supports
    return exp > 0 ? conj_by(pau.inverse(), t) : conj_by(pau, t);
  }
  if (rx == ComponentRole::kDominating && ry == ComponentRole::kShared) {
    const GroupWord pay = table.word(a, y);
    return exp > 0 ? conj_by(pay.inverse(), t) : conj_by(pay, t);
  }
  if (rx == ComponentRole::kShared && ry == ComponentRole::kDominating) {
    const GroupWord pbx = table.word(b, x);
    return exp > 0 ? t * pbx * pau.inverse() * pbx.inverse() * pau : t * pbx * pau * pbx.inverse() * pau.inverse();
  }
  throw UnsupportedCase("no rewriting rule for " + table.name(table.id_of(conjugator)) + " acting on " +
                        table.name(table.id_of(target)) + " (both supports dominating)");
}

GroupWord transvection_conjugate(const GeneratorTable& table, const SilSystemDecomposition& d,
                                 const TransvectionSpec& t, const PartialConjugation& target, int exp) {
  require_exp(exp);
  const SimplicialGraph& g = table.graph();
  if (!leq(g, t.moved, t.by)) throw InputError("transvection needs moved <= by");
  const GroupWord p = GroupWord::generator(table.id_of(target));
  const VertexIndex v = target.vertex;
  const auto& ds = d.additional_components;
  if (std::find(ds.begin(), ds.end(), target.support) == ds.end())
    throw UnsupportedCase("target support is not an additional component");

  if (t.moved == v) {
    const auto pa_id = table.find(t.by, target.support);
    if (!pa_id) throw UnsupportedCase("additional component is not a support of " + g.name(t.by));
    const GroupWord pa = GroupWord::generator(*pa_id, exp);
    return t.side == TransvectionSide::kRight ? pa * p : p * pa;
  }
  if (t.by == v && !target.support.contains(t.moved)) return p;
  throw UnsupportedCase("transvection is outside the rewriting table");
}

HnnData hnn_data(const GeneratorTable& table, const SilSystemDecomposition& d) {
  const SimplicialGraph& g = table.graph();
  if (d.pivot_count() != 3) throw PreconditionError("HNN data needs exactly three simultaneously shared components");
  const auto report = semidirect_report(g, d);

  const VertexIndex w1 = d.system.pivots[0];
  const auto t_id = table.find(w1, d.shared_components[2]);
  if (!t_id) throw DefectError("stable letter is not a generator");

  HnnData h{*t_id, {}, {}, {}};
  std::set<std::size_t> base;
  std::set<std::size_t> associated;
  for (const auto& f : report.factors) {
    for (const auto& p : f.pcs) {
      const std::size_t id = table.id_of(p);
      if (id == *t_id) continue;
      base.insert(id);
      const bool k_factor = f.name == "K";
      const bool from_c1 = f.name == "H_3" && d.shared_components[0].contains(p.vertex);
      if (k_factor || from_c1) associated.insert(id);
    }
  }
  h.base_generators.assign(base.begin(), base.end());
  h.associated_generators.assign(associated.begin(), associated.end());
  const GroupWord t = GroupWord::generator(*t_id);
  for (std::size_t a : h.associated_generators) {
    const GroupWord rhs = conjugate_pc(table, table.at(*t_id), table.at(a), 1);
    h.t_relations.push_back({a, t * GroupWord::generator(a) * t.inverse(), rhs});
  }
  return h;
}

namespace {

std::string gap_word(const GroupWord& w) {
  if (w.empty()) return "One(F)";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += '*';
    out += "F." + std::to_string(l.gen + 1);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace

std::string export_presentation(const PsoPresentation& p, PresentationFormat format) {
  const auto& table = p.generators;
  const SimplicialGraph& g = table.graph();
  std::ostringstream os;
  switch (format) {
    case PresentationFormat::kText:
      for (std::size_t i = 0; i < table.size(); ++i)
        os << "gen " << table.name(i) << " = (" << g.name(table.at(i).vertex) << ", "
           << format_set(g, table.at(i).support) << ")\n";
      for (const auto& r : p.relations) os << "rel " << r.family << ": " << table.format(r.word) << "\n";
      break;
    case PresentationFormat::kGap: {
      for (std::size_t i = 0; i < table.size(); ++i) os << "# F." << i + 1 << " = " << table.name(i) << "\n";
      os << "F := FreeGroup(" << table.size() << ");\n";
      os << "rels := [";
      for (std::size_t i = 0; i < p.relations.size(); ++i)
        os << (i == 0 ? " " : ", ") << gap_word(p.relations[i].word);
      os << " ];\n";
      break;
    }
    case PresentationFormat::kJson: {
      nlohmann::json j;
      j["generators"] = nlohmann::json::array();
      for (std::size_t i = 0; i < table.size(); ++i)
        j["generators"].push_back({{"name", table.name(i)},
                                   {"vertex", g.name(table.at(i).vertex)},
                                   {"support", member_names(g, table.at(i).support)}});
      j["relations"] = nlohmann::json::array();
      for (const auto& r : p.relations) {
        nlohmann::json word = nlohmann::json::array();
        for (const Letter& l : r.word.letters()) word.push_back({table.name(l.gen), l.exp});
        j["relations"].push_back({{"family", r.family}, {"word", word}});
      }
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace raag
