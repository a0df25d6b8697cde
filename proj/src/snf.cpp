#include "snf.hpp"

namespace gkt {

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (d.at(i, i) != 0) ++r;
  return r;
}

std::vector<Int> SnfDecomposition::diagonal() const {
  std::size_t n = std::min(d.rows(), d.cols());
  std::vector<Int> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = d.at(i, i);
  return diag;
}

namespace {

// Nonzero entry of minimal |value| in a[t.., t..]; ties broken by lowest
// row, then lowest column. Returns false if the submatrix is zero.
bool find_pivot(const ZMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& x = a.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pr = i;
        pc = j;
      }
    }
  }
  return found;
}

Int trunc_quot(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_quot(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SnfDecomposition snf(const ZMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  SnfDecomposition out;
  out.u = ZMatrix::identity(r);
  out.v = ZMatrix::identity(c);
  out.d = m;
  ZMatrix& a = out.d;
  ZMatrix& u = out.u;
  ZMatrix& v = out.v;

  std::size_t t = 0;
  while (t < r && t < c) {
    std::size_t pr, pc;
    if (!find_pivot(a, t, pr, pc)) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      // Reduce column t below the pivot, then row t to its right. A nonzero
      // remainder becomes a strictly smaller pivot, so this terminates.
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = trunc_quot(a.at(i, t), a.at(t, t));
        a.add_multiple_of_row(i, t, -q);
        u.add_multiple_of_row(i, t, -q);
        if (a.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = trunc_quot(a.at(t, j), a.at(t, t));
        a.add_multiple_of_col(j, t, -q);
        v.add_multiple_of_col(j, t, -q);
        if (a.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        find_pivot(a, t, pr, pc);
        a.swap_rows(t, pr);
        u.swap_rows(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);
        continue;
      }

      // Pivot now divides its cleared row and column; enforce divisibility
      // over the remaining submatrix.
      bool fixed = true;
      for (std::size_t i = t + 1; i < r && fixed; ++i) {
        for (std::size_t j = t + 1; j < c && fixed; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            a.add_multiple_of_row(t, i, 1);
            u.add_multiple_of_row(t, i, 1);
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }

    if (a.at(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }
  return out;
}

HnfResult hnf_with_transform(const ZMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  HnfResult out;
  out.h = m;
  out.w = ZMatrix::identity(c);
  ZMatrix& h = out.h;
  ZMatrix& w = out.w;

  std::size_t j = 0;
  for (std::size_t i = 0; i < r && j < c; ++i) {
    // gcd-reduce columns j.. on row i until at most one nonzero remains
    for (;;) {
      bool found = false;
      Int best;
      std::size_t bj = j;
      for (std::size_t jj = j; jj < c; ++jj) {
        const Int& x = h.at(i, jj);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          bj = jj;
        }
      }
      if (!found) break;  // row i has no pivot
      h.swap_cols(j, bj);
      w.swap_cols(j, bj);
      bool clean = true;
      for (std::size_t jj = j + 1; jj < c; ++jj) {
        if (h.at(i, jj) == 0) continue;
        Int q = trunc_quot(h.at(i, jj), h.at(i, j));
        h.add_multiple_of_col(jj, j, -q);
        w.add_multiple_of_col(jj, j, -q);
        if (h.at(i, jj) != 0) clean = false;
      }
      if (clean) {
        if (h.at(i, j) < 0) {
          h.negate_col(j);
          w.negate_col(j);
        }
        for (std::size_t jj = 0; jj < j; ++jj) {
          Int q = floor_quot(h.at(i, jj), h.at(i, j));
          h.add_multiple_of_col(jj, j, -q);
          w.add_multiple_of_col(jj, j, -q);
        }
        out.pivots.emplace_back(i, j);
        ++j;
        break;
      }
    }
  }
  return out;
}

ZMatrix hnf(const ZMatrix& m) { return hnf_with_transform(m).h; }

ZMatrix kernel_basis(const ZMatrix& m) {
  SnfDecomposition s = snf(m);
  std::size_t rk = s.rank();
  std::size_t c = m.cols();
  ZMatrix basis(c, c - rk);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = rk; j < c; ++j) basis.at(i, j - rk) = s.v.at(i, j);
  return basis;
}

std::size_t rank(const ZMatrix& m) { return snf(m).rank(); }

std::optional<std::vector<Int>> solve_in_hnf_span(const HnfResult& h,
                                                  const std::vector<Int>& x) {
  if (x.size() != h.h.rows())
    fail(ErrorKind::DimensionMismatch, "span solve: vector length mismatch");
  std::vector<Int> res = x;
  std::vector<Int> z(h.h.cols(), Int(0));
  for (const auto& [pi, pj] : h.pivots) {
    const Int& p = h.h.at(pi, pj);
    if (res[pi] % p != 0) return std::nullopt;
    Int t = res[pi] / p;
    if (t != 0) {
      for (std::size_t i = 0; i < res.size(); ++i) res[i] -= t * h.h.at(i, pj);
    }
    z[pj] = t;
  }
  for (const Int& e : res)
    if (e != 0) return std::nullopt;
  return z;
}

bool in_column_span(const HnfResult& h, const std::vector<Int>& x) {
  return solve_in_hnf_span(h, x).has_value();
}

ZMatrix lattice_canonical_basis(const ZMatrix& m) {
  HnfResult r = hnf_with_transform(m);
  return r.h.submatrix(0, 0, m.rows(), r.pivots.size());
}

}  // namespace gkt
