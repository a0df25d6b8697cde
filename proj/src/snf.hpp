#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zmatrix.hpp"

namespace gkt {

/// Smith normal form U * M * V = D. U and V are unimodular, D is diagonal
/// with nonnegative entries forming a divisibility chain d1 | d2 | ...;
/// zero diagonal entries trail the nonzero ones.
struct SnfDecomposition {
  ZMatrix u;  // rows(M) x rows(M)
  ZMatrix d;  // rows(M) x cols(M)
  ZMatrix v;  // cols(M) x cols(M)

  std::size_t rank() const;
  std::vector<Int> diagonal() const;
};

/// Deterministic for a fixed input: pivots are chosen as the nonzero entry
/// of minimal absolute value, ties broken by lowest row then column index.
SnfDecomposition snf(const ZMatrix& m);

/// Column-style Hermite normal form H = M * W with W unimodular. Pivot
/// entries are positive; entries left of a pivot are reduced into [0, pivot).
struct HnfResult {
  ZMatrix h;
  ZMatrix w;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col), rows increasing
};

HnfResult hnf_with_transform(const ZMatrix& m);
ZMatrix hnf(const ZMatrix& m);

/// Columns form a Z-basis of { x : M x = 0 }.
ZMatrix kernel_basis(const ZMatrix& m);

std::size_t rank(const ZMatrix& m);

/// Exact coefficients z with H * z = x, where H comes from hnf_with_transform.
/// Nonzero coefficients appear only at pivot columns. Empty when x lies
/// outside the column span.
std::optional<std::vector<Int>> solve_in_hnf_span(const HnfResult& h,
                                                  const std::vector<Int>& x);

bool in_column_span(const HnfResult& h, const std::vector<Int>& x);

/// Canonical basis of the column lattice: the pivot columns of the HNF.
/// Two generating sets span the same lattice iff these matrices are equal.
ZMatrix lattice_canonical_basis(const ZMatrix& m);

}  // namespace gkt
