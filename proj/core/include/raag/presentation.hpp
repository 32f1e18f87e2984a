#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"
#include "raag/order.hpp"
#include "raag/pconj.hpp"
#include "raag/sil.hpp"

namespace raag {

struct Letter {
  std::size_t gen;
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over generator ids.
class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(std::initializer_list<Letter> letters);
  static GroupWord generator(std::size_t id, int exp = 1);

  /// Appends with cancellation against the last letter.
  void push_back(Letter l);
  GroupWord& operator*=(const GroupWord& other);
  friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }
  GroupWord inverse() const;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// a b a^-1 b^-1
GroupWord commutator(const GroupWord& a, const GroupWord& b);

/// The nontrivial (in Out) partial conjugations of a graph with dense ids in
/// enumeration order. Keeps its own copy of the graph.
class GeneratorTable {
 public:
  explicit GeneratorTable(SimplicialGraph g);

  const SimplicialGraph& graph() const { return graph_; }
  std::size_t size() const { return pcs_.size(); }
  const std::vector<PartialConjugation>& pcs() const { return pcs_; }
  const PartialConjugation& at(std::size_t id) const { return pcs_.at(id); }
  std::optional<std::size_t> find(VertexIndex v, const VertexSet& support) const;
  /// Throws InputError for out-trivial or foreign pcs.
  std::size_t id_of(const PartialConjugation& p) const;
  /// P_v^C as a one-letter word; throws InputError when C is not a
  /// nontrivial support of v.
  GroupWord word(VertexIndex v, const VertexSet& support, int exp = 1) const;
  std::string name(std::size_t id) const { return pc_name(graph_, pcs_.at(id)); }

  /// "P[a][1]^1 P[b][2]^-1"; the empty word prints as "1".
  std::string format(const GroupWord& w) const;

 private:
  SimplicialGraph graph_;
  std::vector<PartialConjugation> pcs_;
};

struct Relation {
  int family;  // 1..5
  GroupWord word;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct PsoPresentation {
  GeneratorTable generators;
  std::vector<Relation> relations;
};

PsoPresentation pso_presentation(const SimplicialGraph& g);

/// Presentation after eliminating each listed generator through the product
/// relation of its vertex (at most one per vertex). Family-5 relations used
/// for elimination are dropped and the generator is substituted elsewhere.
struct TietzeView {
  std::vector<std::size_t> kept;        // generator ids still present
  std::vector<std::size_t> eliminated;  // ids removed
  std::vector<Relation> relations;      // over the original ids, none eliminated
};
TietzeView tietze_view(const PsoPresentation& p, const std::vector<std::size_t>& eliminate);

/// Dominant pcs P_v^{C_2} for v in C_1 and P_v^{C_1} for v in C_i, i != 1:
/// the generators dropped in the N1/N2 and semidirect splittings.
std::vector<PartialConjugation> excluded_dominants(const SimplicialGraph& g, const SilSystemDecomposition& d);

struct NamedGeneratorList {
  std::string name;
  std::vector<PartialConjugation> pcs;
};

struct DecompositionReport {
  enum class Kind { kN1N2, kSemidirect };
  Kind kind;
  std::vector<NamedGeneratorList> factors;
  std::vector<std::pair<std::string, bool>> flags;

  const std::vector<PartialConjugation>& factor(const std::string& name) const;
  bool flag(const std::string& name) const;
};

/// N1 = dominants without excluded_dominants, N2 = the other nontrivial
/// non-dominant pcs. Needs m = 0 and no subordinate pcs (PreconditionError).
/// Flags: n1_nonempty, n2_nonempty.
DecompositionReport n1n2_report(const SimplicialGraph& g, const SilSystemDecomposition& d);

/// First vertex of a simultaneously shared component that breaks the
/// semidirect vertex hypothesis, with the reason.
std::optional<std::string> semidirect_vertex_violation(const SimplicialGraph& g, const SilSystemDecomposition& d);

/// Factors G, H_3..H_n, K. Needs n >= 3, m = 0 and the vertex hypothesis.
/// Flags: g_nonempty.
DecompositionReport semidirect_report(const SimplicialGraph& g, const SilSystemDecomposition& d);

/// Word for c^exp t c^-exp with c = conjugator, t = target, both nontrivial
/// pcs of table.graph(). exp is +1 or -1. Throws UnsupportedCase when the
/// pair is outside the implemented tables.
GroupWord conjugate_pc(const GeneratorTable& table, const PartialConjugation& conjugator,
                       const PartialConjugation& target, int exp = 1);

/// Word for T^exp P T^-exp with T a transvection and P = target.
GroupWord transvection_conjugate(const GeneratorTable& table, const SilSystemDecomposition& d,
                                 const TransvectionSpec& t, const PartialConjugation& target, int exp = 1);

struct TRelation {
  std::size_t generator;  // a in t a t^-1 = rhs
  GroupWord lhs;
  GroupWord rhs;
};

struct HnnData {
  std::size_t stable_letter;
  std::vector<std::size_t> base_generators;
  std::vector<std::size_t> associated_generators;
  std::vector<TRelation> t_relations;
};

/// Stable letter P_{w_1}^{C_3}; needs the semidirect preconditions with n = 3.
HnnData hnn_data(const GeneratorTable& table, const SilSystemDecomposition& d);

enum class PresentationFormat { kText, kGap, kJson };
std::string export_presentation(const PsoPresentation& p, PresentationFormat format);

}  // namespace raag
