#include "cocycle.hpp"

#include <algorithm>
#include <sstream>

namespace gkt {

Bits Bits::unit(std::size_t l, std::size_t i) {
  if (i >= l) fail(ErrorKind::DimensionMismatch, "unit vector index out of range");
  Bits b = zero(l);
  b.coords[i] = 1;
  return b;
}

Bits Bits::from_index(std::size_t l, std::size_t idx) {
  Bits b = zero(l);
  for (std::size_t i = 0; i < l; ++i) b.coords[i] = (idx >> i) & 1u;
  return b;
}

std::size_t Bits::index() const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) idx |= (std::size_t{1} << i);
  return idx;
}

Bits Bits::operator+(const Bits& o) const {
  if (coords.size() != o.coords.size())
    fail(ErrorKind::LengthMismatch, "adding bit vectors of different lengths");
  Bits r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] ^= o.coords[i];
  return r;
}

uint8_t Bits::parity() const {
  uint8_t p = 0;
  for (uint8_t c : coords) p ^= c;
  return p;
}

bool Bits::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](uint8_t c) { return c == 0; });
}

std::string Bits::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << int(coords[i]);
  }
  os << ")";
  return os.str();
}

uint8_t kappa(const Bits& m, const Bits& n) {
  if (m.size() != n.size())
    fail(ErrorKind::LengthMismatch, "kappa arguments have different lengths");
  uint8_t acc = 0;
  uint8_t n_prefix = 0;  // sum of n_j for j < i
  for (std::size_t i = 0; i < m.size(); ++i) {
    acc ^= static_cast<uint8_t>(m.coords[i] & n_prefix);
    n_prefix ^= n.coords[i];
  }
  return acc;
}

int c_kappa(const Bits& m, const Bits& n) { return kappa(m, n) ? -1 : 1; }

CocycleTable CocycleTable::trivial(std::size_t l) {
  CocycleTable t;
  t.l = l;
  t.values.assign((std::size_t{1} << l) * (std::size_t{1} << l), 0);
  return t;
}

CocycleTable CocycleTable::kappa_table(std::size_t l) {
  CocycleTable t = trivial(l);
  std::size_t n = t.group_size();
  for (std::size_t mi = 0; mi < n; ++mi)
    for (std::size_t ni = 0; ni < n; ++ni)
      t.values[mi * n + ni] = kappa(Bits::from_index(l, mi), Bits::from_index(l, ni));
  return t;
}

uint8_t CocycleTable::value(const Bits& m, const Bits& n) const {
  if (m.size() != l || n.size() != l)
    fail(ErrorKind::LengthMismatch, "cocycle table argument length mismatch");
  return value_by_index(m.index(), n.index());
}

Permutation Permutation::identity(std::size_t l) {
  Permutation p;
  p.images.resize(l);
  for (std::size_t i = 0; i < l; ++i) p.images[i] = i;
  return p;
}

Permutation Permutation::from_images(std::vector<std::size_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t x : images) {
    if (x >= images.size() || seen[x])
      fail(ErrorKind::Invalid, "permutation images are not a bijection");
    seen[x] = true;
  }
  Permutation p;
  p.images = std::move(images);
  return p;
}

CocycleTable permute_kappa(const CocycleTable& k, const Permutation& s) {
  if (s.size() != k.l)
    fail(ErrorKind::LengthMismatch, "permutation length differs from table rank");
  CocycleTable t = CocycleTable::trivial(k.l);
  std::size_t n = t.group_size();
  auto apply = [&](const Bits& m) {
    Bits r = Bits::zero(k.l);
    for (std::size_t i = 0; i < k.l; ++i) r.coords[i] = m.coords[s.images[i]];
    return r;
  };
  for (std::size_t mi = 0; mi < n; ++mi)
    for (std::size_t ni = 0; ni < n; ++ni)
      t.values[mi * n + ni] = k.value(apply(Bits::from_index(k.l, mi)),
                                      apply(Bits::from_index(k.l, ni)));
  return t;
}

int bicharacter(const CocycleTable& c, const Bits& m, const Bits& n) {
  return c.sign(m, n) * c.sign(n, m);
}

CocycleCheck verify_cocycle(const CocycleTable& f) {
  CocycleCheck out;
  std::size_t n = f.group_size();
  for (std::size_t mi = 0; mi < n; ++mi) {
    if (f.value_by_index(0, mi) != 0 || f.value_by_index(mi, 0) != 0) {
      out.ok = false;
      out.counterexample =
          "normalisation fails at " + Bits::from_index(f.l, mi).to_string();
      return out;
    }
  }
  for (std::size_t mi = 0; mi < n; ++mi) {
    Bits m = Bits::from_index(f.l, mi);
    for (std::size_t ni = 0; ni < n; ++ni) {
      Bits nn = Bits::from_index(f.l, ni);
      std::size_t mn = (m + nn).index();
      for (std::size_t oi = 0; oi < n; ++oi) {
        Bits o = Bits::from_index(f.l, oi);
        std::size_t no = (nn + o).index();
        uint8_t lhs = f.value_by_index(mi, ni) ^ f.value_by_index(mn, oi);
        uint8_t rhs = f.value_by_index(ni, oi) ^ f.value_by_index(mi, no);
        if (lhs != rhs) {
          out.ok = false;
          out.counterexample = "identity fails at (" + m.to_string() + ", " +
                               nn.to_string() + ", " + o.to_string() + ")";
          return out;
        }
      }
    }
  }
  return out;
}

std::optional<CoboundaryMap> find_coboundary(const CocycleTable& c1,
                                             const CocycleTable& c2) {
  if (c1.l != c2.l)
    fail(ErrorKind::LengthMismatch, "coboundary search: table ranks differ");
  std::size_t l = c1.l;
  if (l > 4)
    fail(ErrorKind::SearchSpaceTooLarge,
         "coboundary search is brute force; l <= 4 required");
  std::size_t n = std::size_t{1} << l;
  std::size_t nfree = n - 1;  // b(0) is pinned to +1

  // Candidate b encoded by a mask over the nonzero elements in index order;
  // increasing mask enumerates candidates lexicographically over Bits.
  for (std::size_t mask = 0; mask < (std::size_t{1} << nfree); ++mask) {
    std::vector<uint8_t> b(n, 0);
    for (std::size_t i = 1; i < n; ++i) b[i] = (mask >> (i - 1)) & 1u;
    bool good = true;
    for (std::size_t mi = 0; mi < n && good; ++mi) {
      Bits m = Bits::from_index(l, mi);
      for (std::size_t ni = 0; ni < n && good; ++ni) {
        Bits nn = Bits::from_index(l, ni);
        std::size_t si = (m + nn).index();
        uint8_t delta = b[mi] ^ b[si] ^ b[ni];
        good = (c2.value_by_index(mi, ni) ==
                (c1.value_by_index(mi, ni) ^ delta));
      }
    }
    if (good) {
      CoboundaryMap out;
      out.l = l;
      out.b = std::move(b);
      return out;
    }
  }
  return std::nullopt;
}

Bits reduce_degree(std::size_t k, std::size_t l, const std::vector<long long>& free_part,
                   const Bits& torsion_part) {
  if (free_part.size() != k || torsion_part.size() != l)
    fail(ErrorKind::DimensionMismatch, "degree does not match (k, l)");
  Bits r = Bits::zero(k + l);
  for (std::size_t i = 0; i < k; ++i) {
    if (free_part[i] < 0) fail(ErrorKind::DimensionMismatch, "negative free degree");
    r.coords[i] = static_cast<uint8_t>(free_part[i] & 1);
  }
  for (std::size_t i = 0; i < l; ++i) r.coords[k + i] = torsion_part.coords[i];
  return r;
}

int c_lambda(std::size_t k, std::size_t l, const std::vector<long long>& free_a,
             const Bits& tor_a, const std::vector<long long>& free_b,
             const Bits& tor_b) {
  return c_kappa(reduce_degree(k, l, free_a, tor_a), reduce_degree(k, l, free_b, tor_b));
}

bool product_sign_identity(std::size_t k, std::size_t a, std::size_t l, std::size_t b) {
  std::size_t p_len = k + a, q_len = l + b;
  std::size_t np = std::size_t{1} << p_len, nq = std::size_t{1} << q_len;
  auto concat = [&](const Bits& x, const Bits& y) {
    Bits r = Bits::zero(p_len + q_len);
    for (std::size_t i = 0; i < p_len; ++i) r.coords[i] = x.coords[i];
    for (std::size_t i = 0; i < q_len; ++i) r.coords[p_len + i] = y.coords[i];
    return r;
  };
  for (std::size_t ai = 0; ai < np; ++ai)
    for (std::size_t bi = 0; bi < nq; ++bi)
      for (std::size_t ci = 0; ci < np; ++ci)
        for (std::size_t di = 0; di < nq; ++di) {
          Bits da = Bits::from_index(p_len, ai), db = Bits::from_index(q_len, bi);
          Bits da2 = Bits::from_index(p_len, ci), db2 = Bits::from_index(q_len, di);
          int lhs = c_kappa(concat(da, db), concat(da2, db2));
          int cross = (db.parity() & da2.parity()) ? -1 : 1;
          int rhs = c_kappa(da, da2) * c_kappa(db, db2) * cross;
          if (lhs != rhs) return false;
        }
  return true;
}

}  // namespace gkt
