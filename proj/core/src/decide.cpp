#include "raag/decide.hpp"

#include "raag/errors.hpp"
#include "raag/order.hpp"
#include "raag/pconj.hpp"
#include "raag/presentation.hpp"

namespace raag {

using nlohmann::json;

std::string status_name(Status s) {
  switch (s) {
    case Status::kYes:
      return "yes";
    case Status::kNo:
      return "no";
    case Status::kUnknown:
      return "unknown";
    case Status::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

json names_json(const SimplicialGraph& g, const VertexSet& s) { return member_names(g, s); }

json system_json(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  json j;
  j["pivots"] = json::array();
  for (VertexIndex w : d.system.pivots) j["pivots"].push_back(g.name(w));
  j["core"] = names_json(g, d.core());
  j["shared_components"] = json::array();
  for (const auto& c : d.shared_components) j["shared_components"].push_back(names_json(g, c));
  j["additional_components"] = json::array();
  for (const auto& c : d.additional_components) j["additional_components"].push_back(names_json(g, c));
  return j;
}

namespace {

json pc_json(const SimplicialGraph& g, const PartialConjugation& p) {
  return {{"name", pc_name(g, p)}, {"vertex", g.name(p.vertex)}, {"support", names_json(g, p.support)}};
}

json pc_list_json(const SimplicialGraph& g, const std::vector<PartialConjugation>& pcs) {
  json out = json::array();
  for (const auto& p : pcs) out.push_back(pc_json(g, p));
  return out;
}

json order_pairs_json(const SimplicialGraph& g) {
  json out = json::array();
  for (const auto& op : order_pairs(g)) out.push_back({g.name(op.lower), g.name(op.upper)});
  return out;
}

void require_no_sil(const SimplicialGraph& g) {
  if (has_sil_pair(g)) throw PreconditionError("graph has a SIL-pair");
}

Decision make(Status out, Status pso, const char* rule, json cert) {
  return Decision{{out, pso}, rule, std::move(cert), {}};
}

}  // namespace

TrivialityResult p_is_trivial(const SimplicialGraph& g) {
  require_no_sil(g);
  TrivialityResult r{true, json::object()};
  r.certificate["nontrivial_pcs"] = pc_list_json(g, nontrivial_pcs(g));
  r.certificate["strict_order_pairs"] = json::array();
  for (const auto& op : order_pairs(g))
    if (!leq(g, op.upper, op.lower))
      r.certificate["strict_order_pairs"].push_back({g.name(op.lower), g.name(op.upper)});
  r.trivial = r.certificate["nontrivial_pcs"].empty() && r.certificate["strict_order_pairs"].empty();
  return r;
}

Decision no_sil_rule(const SimplicialGraph& g) {
  require_no_sil(g);
  json cert;
  cert["order_pairs"] = order_pairs_json(g);
  cert["disconnected_complements"] = json::array();
  for (VertexIndex v = 0; v < g.order(); ++v) {
    const auto comps = star_complement_components(g, v);
    if (comps.size() < 2) continue;
    json comps_json = json::array();
    for (const auto& c : comps) comps_json.push_back(names_json(g, c));
    cert["disconnected_complements"].push_back({{"vertex", g.name(v)}, {"components", comps_json}});
  }
  const auto pairs = order_pairs(g);
  const bool single_equivalent_pair =
      pairs.size() == 2 && pairs[0].lower == pairs[1].upper && pairs[0].upper == pairs[1].lower;
  cert["equivalent_pair"] = single_equivalent_pair
                                ? json::array({g.name(pairs[0].lower), g.name(pairs[0].upper)})
                                : json(nullptr);
  const bool yes = single_equivalent_pair && cert["disconnected_complements"].empty();
  return make(yes ? Status::kYes : Status::kNo, Status::kNotApplicable, rules::kNoSil, std::move(cert));
}

std::optional<Decision> core_singleton_rule(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  if (d.core().size() != 1 || !is_connected(g)) return std::nullopt;
  json cert;
  cert["system"] = system_json(g, d);
  cert["ker_p_generators"] = json::array();
  for (const auto& k : ker_p_generators(g)) {
    if (k.kind == KerPGeneratorKind::kLeafTransvection) {
      cert["ker_p_generators"].push_back({{"kind", "leaf_transvection"},
                                          {"moved", g.name(k.transvection.moved)},
                                          {"by", g.name(k.transvection.by)}});
    } else {
      cert["ker_p_generators"].push_back(
          {{"kind", "vhat_conjugation"}, {"vertex", g.name(k.vertex)}, {"component", names_json(g, k.component)}});
    }
  }
  if (cert["ker_p_generators"].empty()) throw DefectError("singleton core without ker P witnesses");
  return make(Status::kNo, Status::kUnknown, rules::kCoreSingleton, std::move(cert));
}

std::optional<std::string> corollary_support_violation(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  const auto subs = subordinate_pcs(g, d);
  VertexSet definers;
  for (const auto& p : subs) definers.insert(p.vertex);
  for (const auto& p : subs) {
    const VertexSet& ci = d.shared_components[*d.shared_index_of(p.vertex)];
    VertexSet needed = (definers & ci);
    needed.erase(p.vertex);
    if (!needed.is_subset_of(p.support))
      return "support of " + pc_name(g, p) + " misses subordinate-defining vertices " +
             format_set(g, needed - p.support);
  }
  return std::nullopt;
}

namespace {

json report_json(const SimplicialGraph& g, const DecompositionReport& r) {
  json j;
  j["factors"] = json::object();
  json order = json::array();
  for (const auto& f : r.factors) {
    j["factors"][f.name] = pc_list_json(g, f.pcs);
    order.push_back(f.name);
  }
  j["factor_order"] = order;
  j["flags"] = json::object();
  for (const auto& [k, v] : r.flags) j["flags"][k] = v;
  return j;
}

Decision with_additional(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  json cert;
  cert["system"] = system_json(g, d);
  VertexSet lambda;
  for (VertexIndex v = 0; v < g.order(); ++v)
    if (d.core().is_subset_of(g.neighbors(v))) lambda.insert(v);
  cert["lambda_vertices"] = names_json(g, lambda);
  const auto pcs = nontrivial_pcs(g);
  cert["factors"] = json::array();
  for (const auto& dj : d.additional_components) {
    std::vector<PartialConjugation> factor;
    for (const auto& p : pcs)
      if (p.support == dj) factor.push_back(p);
    cert["factors"].push_back(pc_list_json(g, factor));
  }
  return make(Status::kNo, Status::kUnknown, rules::kWithAddCpnts, std::move(cert));
}

Decision structure_of_pso(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  const auto report = n1n2_report(g, d);
  json cert;
  cert["system"] = system_json(g, d);
  cert["report"] = report_json(g, report);
  cert["excluded_dominants"] = pc_list_json(g, excluded_dominants(g, d));
  const bool has_transvections = !order_pairs(g).empty();
  cert["has_transvections"] = has_transvections;
  Decision out = make(Status::kUnknown, Status::kUnknown, rules::kStructureOfPso, json());
  if (report.flag("n1_nonempty") && report.flag("n2_nonempty")) {
    out.verdict.pso_status = Status::kNo;
    if (has_transvections)
      out.warnings.push_back("transvections present; Out-level status not settled by the product splitting");
    else
      out.verdict.out_status = Status::kNo;
  } else {
    out.warnings.push_back(std::string("factor ") + (report.flag("n1_nonempty") ? "N2" : "N1") +
                           " has no generators; direct-product obstruction needs two infinite factors");
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace

Decision decide(const SimplicialGraph& g) {
  if (!has_sil_pair(g)) return no_sil_rule(g);

  auto d = maximal_sil_system(g);
  if (!d && !separated_sil_pairs(g).empty()) {
    json cert;
    cert["separated_sil_pairs"] = json::array();
    for (const auto& [a, b] : separated_sil_pairs(g)) cert["separated_sil_pairs"].push_back({g.name(a), g.name(b)});
    Decision out = make(Status::kUnknown, Status::kUnknown, rules::kUndecided, std::move(cert));
    out.warnings.push_back("separated SIL-pairs exist but no pivot set meets every maximal-system condition");
    return out;
  }
  if (!d) {
    json cert;
    cert["sil_pairs"] = json::array();
    for (const auto& [a, b] : sil_pairs(g)) cert["sil_pairs"].push_back({g.name(a), g.name(b)});
    Decision out = make(Status::kUnknown, Status::kUnknown, rules::kConnectedSilOnly, std::move(cert));
    out.warnings.push_back("every SIL-pair is joined by a path avoiding its common link; no maximal system");
    return out;
  }

  if (auto r = core_singleton_rule(g, *d)) return *r;

  const std::size_t m = d->additional_components.size();
  if (m >= 2) return with_additional(g, *d);
  if (m == 1) {
    json cert;
    cert["system"] = system_json(g, *d);
    Decision out = make(Status::kUnknown, Status::kUnknown, rules::kOneAdditional, std::move(cert));
    out.warnings.push_back("exactly one additional component; no general criterion applies");
    return out;
  }

  if (subordinate_pcs(g, *d).empty()) return structure_of_pso(g, *d);

  const std::size_t n = d->pivot_count();
  const auto vertex_violation = semidirect_vertex_violation(g, *d);
  if (n >= 3 && !vertex_violation) {
    const auto report = semidirect_report(g, *d);
    const bool g_nonempty = report.flag("g_nonempty");
    const bool has_transvections = !order_pairs(g).empty();
    json cert;
    cert["system"] = system_json(g, *d);
    cert["report"] = report_json(g, report);
    cert["has_transvections"] = has_transvections;

    if (n == 3 && !g_nonempty) {
      if (auto bad = corollary_support_violation(g, *d)) {
        Decision out = make(Status::kUnknown, Status::kUnknown, rules::kUndecided, std::move(cert));
        out.warnings.push_back(*bad);
        return out;
      }
      cert["finite_index"] = !has_transvections;
      return make(Status::kUnknown, Status::kYes, rules::kBeingAhCor, std::move(cert));
    }
    if (g_nonempty) {
      Decision out = make(Status::kUnknown, Status::kNo, rules::kSemidirect, std::move(cert));
      if (has_transvections) {
        out.warnings.push_back("transvections present; Out-level inference from the product splitting not made");
      } else {
        out.verdict.out_status = Status::kNo;
        out.certificate["out_inference"] = "derived";
      }
      return out;
    }
    Decision out = make(Status::kUnknown, Status::kUnknown, rules::kUndecided, std::move(cert));
    out.warnings.push_back("four or more shared components with subordinate partial conjugations");
    return out;
  }

  json cert;
  cert["system"] = system_json(g, *d);
  Decision out = make(Status::kUnknown, Status::kUnknown, rules::kUndecided, std::move(cert));
  out.warnings.push_back(vertex_violation ? *vertex_violation : "fewer than three shared components with subordinate partial conjugations");
  return out;
}

json decision_to_json(const Decision& d) {
  json j;
  j["out_status"] = status_name(d.verdict.out_status);
  j["pso_status"] = status_name(d.verdict.pso_status);
  j["rule"] = d.rule;
  j["certificate"] = d.certificate;
  j["warnings"] = d.warnings;
  return j;
}

}  // namespace raag
