#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocycle.hpp"

namespace gkt {

/// Degree in P = N^k x Z_2^l, free coordinates first.
struct DegreeElem {
  std::vector<long long> free_part;
  Bits torsion_part;

  std::size_t k() const { return free_part.size(); }
  std::size_t l() const { return torsion_part.size(); }
  static DegreeElem zero(std::size_t k, std::size_t l);
  static DegreeElem free_unit(std::size_t k, std::size_t l, std::size_t color);
  static DegreeElem torsion_unit(std::size_t k, std::size_t l, std::size_t gen);
  DegreeElem operator+(const DegreeElem& o) const;
  bool operator==(const DegreeElem&) const = default;
  bool is_zero() const;
  std::string to_string() const;
};

/// Parity of the sum of all coordinates of a degree.
uint8_t delta_lambda(const DegreeElem& d);

/// c_Lambda on degrees (see cocycle module); both arguments in the same P.
int c_lambda(const DegreeElem& a, const DegreeElem& b);

// ---------------------------------------------------------------------------
// Directed 1-graphs

struct OneGraphEdge {
  std::string id;
  std::string source;
  std::string range;
};

/// Finite directed multigraph E = (E^0, E^1, r, s). An edge e lies in vE^1w
/// when range(e) = v and source(e) = w. Vertex input order is canonical and
/// fixes all downstream matrix indexings.
class OneGraph {
 public:
  OneGraph(std::vector<std::string> vertices, std::vector<OneGraphEdge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<OneGraphEdge>& edges() const { return edges_; }
  std::size_t vertex_index(const std::string& v) const;
  bool empty() const { return vertices_.empty(); }

 private:
  std::vector<std::string> vertices_;
  std::vector<OneGraphEdge> edges_;
  std::map<std::string, std::size_t> vertex_index_;
};

/// Z_2-valued edge labelling; extends to paths by summation.
struct DeltaLabeling {
  std::map<std::string, uint8_t> values;

  static DeltaLabeling zero(const OneGraph& g);
  uint8_t at(const std::string& edge_id) const;
  void require_total(const OneGraph& g) const;
};

struct GraphChecks {
  bool row_finite = true;
  bool no_sources = true;
  bool no_sinks = true;
};

GraphChecks graph_checks(const OneGraph& g);

// ---------------------------------------------------------------------------
// k-graph skeletons and Z_2^l actions

struct ColoredEdge {
  std::string id;
  std::string source;
  std::string range;
};

/// A commuting square e f = f2 e2 where e, e2 have color i and f, f2 have
/// color j for some pair i < j; composition is written range-first, so
/// s(e) = r(f) and s(f2) = r(e2).
struct Square {
  std::string e, f, f2, e2;
};

class KGraphSkeleton {
 public:
  KGraphSkeleton() = default;
  KGraphSkeleton(std::size_t k, std::vector<std::string> vertices,
                 std::vector<std::vector<ColoredEdge>> edges_by_color,
                 std::vector<Square> squares);

  std::size_t k() const { return k_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<ColoredEdge>>& edges_by_color() const {
    return edges_by_color_;
  }
  const std::vector<Square>& squares() const { return squares_; }

  bool has_vertex(const std::string& v) const;
  const ColoredEdge& edge(const std::string& id) const;
  std::size_t edge_color(const std::string& id) const;
  std::size_t edge_count() const;

  /// (e, f) -> (f2, e2) for the square e f = f2 e2; empty when absent.
  std::optional<std::pair<std::string, std::string>> flip_up(
      const std::string& e, const std::string& f) const;
  /// (f2, e2) -> (e, f); empty when absent.
  std::optional<std::pair<std::string, std::string>> flip_down(
      const std::string& f2, const std::string& e2) const;

 private:
  std::size_t k_ = 0;
  std::vector<std::string> vertices_;
  std::vector<std::vector<ColoredEdge>> edges_by_color_;
  std::vector<Square> squares_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> edge_index_;  // id -> (color, pos)
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> fwd_;
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> bwd_;
};

struct SkeletonDiagnostics {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Square bijections well-formed (every composable bi-coloured pair factors
/// exactly once on each side, ranges and sources preserved) and, for k >= 3,
/// the cube condition on every color triple. The first violation found is
/// named in the diagnostics; nothing is thrown.
SkeletonDiagnostics validate_skeleton(const KGraphSkeleton& s);

/// One generator of a Z_2^l action: a color-preserving automorphism given by
/// vertex and edge permutations.
struct GeneratorAction {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
};

struct FiniteAbelianAction {
  std::size_t l = 0;
  std::vector<GeneratorAction> generators;

  static FiniteAbelianAction trivial(const KGraphSkeleton& s, std::size_t l);
};

/// Generator actions must be involutive, pairwise commuting, color and
/// range/source preserving, and must map squares to squares.
void validate_action(const KGraphSkeleton& s, const FiniteAbelianAction& a);

/// Lambda = Gamma x_rho F in crossed-product normal form.
struct PGraphPresentation {
  KGraphSkeleton skeleton;
  FiniteAbelianAction action;

  std::size_t k() const { return skeleton.k(); }
  std::size_t l() const { return action.l; }

  std::string apply_action_vertex(const Bits& g, const std::string& v) const;
  std::string apply_action_edge(const Bits& g, const std::string& e) const;
};

PGraphPresentation crossed_product(const KGraphSkeleton& gamma,
                                   const FiniteAbelianAction& rho);

PGraphPresentation cartesian_product(const PGraphPresentation& a,
                                     const PGraphPresentation& b);

/// Skew product Gamma x_b F for b : edges -> Z_2^l, carrying the translation
/// action. Vertices are (v, g); an edge (e, g) runs from (s(e), g + b(e)) to
/// (r(e), g).
PGraphPresentation skew_product(const KGraphSkeleton& gamma,
                                const std::map<std::string, Bits>& b, std::size_t l);

// ---------------------------------------------------------------------------
// Morphisms of a crossed product, and bounded fragments

/// Morphism (path, g): a Gamma-path in color-sorted normal form plus a group
/// element. Source in Lambda is rho_g(source of the path).
struct PMorphism {
  std::string range;               // range vertex of the path, in Gamma
  std::vector<std::string> edges;  // color-sorted canonical representative
  Bits g;

  bool operator==(const PMorphism&) const = default;
  bool operator<(const PMorphism& o) const;
};

std::string path_source(const KGraphSkeleton& s, const PMorphism& m);
std::string morphism_source(const PGraphPresentation& p, const PMorphism& m);
DegreeElem morphism_degree(const PGraphPresentation& p, const PMorphism& m);
PMorphism vertex_morphism(const PGraphPresentation& p, const std::string& v,
                          const Bits& g);

/// Canonical color-sorted representative of an edge path (range-first order).
std::vector<std::string> normalize_path(const KGraphSkeleton& s,
                                        std::vector<std::string> edges);

/// (mu, g)(nu, h) = (mu rho_g(nu), g + h); throws when not composable.
PMorphism compose(const PGraphPresentation& p, const PMorphism& a, const PMorphism& b);

/// Unique lambda* with lambda lambda* = r(lambda) for the degree-(0, e_gen)
/// morphism (vertex, e_gen).
std::pair<std::string, std::size_t> star_of(const PGraphPresentation& p,
                                            const std::string& vertex,
                                            std::size_t gen);

// ---------------------------------------------------------------------------
// Explicit finite category tables

struct CatMorphism {
  std::string id;
  DegreeElem degree;
  std::string range;
  std::string source;
};

/// A fragment of a P-graph presented as an explicit table: objects
/// (identities), morphisms of bounded degree in N^k x Z_2^l, and a partial
/// composition table. Identity compositions are implicit. Decomposition
/// needs the degree-{0,1}^k x Z_2^l part to be present.
class FiniteCategoryTable {
 public:
  FiniteCategoryTable(std::size_t k, std::size_t l, std::vector<std::string> objects,
                      std::vector<CatMorphism> morphisms,
                      std::vector<std::array<std::string, 3>> composites);

  std::size_t k() const { return k_; }
  std::size_t l() const { return l_; }
  const std::vector<std::string>& objects() const { return objects_; }
  /// All morphisms including the identities (which carry the object id).
  const std::vector<CatMorphism>& morphisms() const { return morphisms_; }
  const CatMorphism& morphism(const std::string& id) const;
  bool is_object(const std::string& id) const;

  std::optional<std::string> compose(const std::string& a, const std::string& b) const;
  std::vector<std::string> morphisms_of_degree(const DegreeElem& d) const;

 private:
  std::size_t k_ = 0, l_ = 0;
  std::vector<std::string> objects_;
  std::vector<CatMorphism> morphisms_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::string, std::string>, std::string> compose_;
};

/// All Lambda-morphisms with free degree bounded per color, with every
/// composition that stays inside the bound.
FiniteCategoryTable enumerate_fragment(const PGraphPresentation& p,
                                       const std::vector<long long>& free_bound);

struct Decomposition {
  KGraphSkeleton skeleton;
  FiniteAbelianAction action;
};

/// Structure decomposition: recovers (Gamma, rho) with the table isomorphic
/// to the crossed product. Requires the singleton property for the sets
/// v T^{(0,g)} and T^{(0,g)} v and unique factorisation on the fragment;
/// failures raise NotAPGraph with a witness.
Decomposition decompose(const FiniteCategoryTable& t);

/// Unique lambda* with lambda lambda* = r(lambda), located in the table.
std::string star_of(const FiniteCategoryTable& t, const std::string& morphism_id);

/// c_Lambda satisfies the 2-cocycle identity on the table's composable
/// triples (those whose composites are present), plus normalisation.
CocycleCheck verify_clambda_on_table(const FiniteCategoryTable& t);

/// Same check on explicitly supplied triples; a non-composable triple is an
/// error rather than a failure.
CocycleCheck verify_cocycle_on_triples(
    const FiniteCategoryTable& t,
    const std::vector<std::array<std::string, 3>>& triples);

/// 1-graph viewed as a 1-colored skeleton.
KGraphSkeleton skeleton_of(const OneGraph& g);

}  // namespace gkt
