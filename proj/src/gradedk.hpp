#pragma once

#include <map>
#include <optional>

#include "fgab.hpp"
#include "pgraph.hpp"

namespace gkt {

/// The ordered pair (K^gr_0, K^gr_1).
struct GradedKPair {
  FgAbGroup k0, k1;

  bool operator==(const GradedKPair&) const = default;
  std::string text() const;  // "(Z/5, 0)"
};

/// A(v, w) = sum over edges e with range v, source w of (-1)^delta(e);
/// rows and columns indexed by the input vertex order.
ZMatrix signed_adjacency(const OneGraph& e, const DeltaLabeling& delta);

struct GradedKResult {
  GradedKPair pair;
  /// Set when --force evaluated the formula on a graph with sources or sinks.
  bool outside_hypotheses = false;
};

/// K^gr of the graph algebra: k0 = coker, k1 = ker of 1 - A^t on Z E^0.
/// Without force, graphs with sources or sinks are rejected.
GradedKResult kgr_graph(const OneGraph& e, const DeltaLabeling& delta, bool force = false);

/// The classical formula: kgr_graph with the zero labelling.
GradedKResult ungraded_k(const OneGraph& e, bool force = false);

/// Bouquet of p odd and q even loops: (Z/|1+p-q|, 0), or (Z, Z) when 1+p-q=0.
GradedKPair cuntz_kgr(std::size_t odd_p, std::size_t even_q);

/// (Z, 0) for even n, (0, Z) for odd n.
GradedKPair clifford_kgr(std::size_t n);

/// Degree shift under tensoring with Cl_1: swaps the components.
GradedKPair shift_cl1(const GradedKPair& p);

/// Crossed product by the grading automorphism: same shift.
GradedKPair crossed_z2_kgr(const GradedKPair& p);

/// Data of the graded Pimsner-Voiculescu sequence for a crossed product by Z
/// with grading beta^k: the middle maps are f_j = id - (-1)^k alpha_j^k gamma_j.
struct PvProblem {
  Presentation g0, g1;
  ZMatrix alpha0, alpha1;  // identity when the grading is functor-induced
  ZMatrix gamma0, gamma1;
  int k = 0;
};

/// The two short exact sequences 0 -> coker f_j -> K_j -> ker f_{1-j} -> 0.
struct PvSolution {
  ExtensionResult k0, k1;
};

PvSolution pv_solve(const PvProblem& p);

/// Convenience constructor: both automorphism maps identity on the canonical
/// presentations of the given pair (the functor-induced case).
PvProblem pv_problem_from_pair(const GradedKPair& pair, int k);

/// A vertex potential eps with delta(e) = eps(r(e)) + eps(s(e)) certifies the
/// grading inner, whence K^gr equals ungraded K. Found by propagation over
/// connected components with eps = 0 at the first vertex of each component.
std::optional<std::map<std::string, uint8_t>> inner_potential(const OneGraph& e,
                                                              const DeltaLabeling& delta);

/// K-theory facing entry point for AF-style telescopes.
LimitClassification stationary_limit_kgr(const Presentation& g, const FgAbHom& f);

}  // namespace gkt
