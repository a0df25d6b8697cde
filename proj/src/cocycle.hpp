#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace gkt {

/// Element of Z_2^l. Coordinates are 1-indexed in the mathematical notation
/// (m_1 ... m_l) and 0-indexed here.
struct Bits {
  std::vector<uint8_t> coords;

  Bits() = default;
  explicit Bits(std::vector<uint8_t> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  static Bits zero(std::size_t l) { return Bits(std::vector<uint8_t>(l, 0)); }
  static Bits unit(std::size_t l, std::size_t i);

  /// Index <-> element bijection: coordinate i is bit i of the index, so
  /// increasing index enumerates Z_2^l in lexicographic order from the last
  /// coordinate; index 0 is the zero element.
  static Bits from_index(std::size_t l, std::size_t idx);
  std::size_t index() const;

  Bits operator+(const Bits& o) const;
  uint8_t parity() const;
  bool is_zero() const;
  bool operator==(const Bits&) const = default;
  std::string to_string() const;  // e.g. "(1,0,1)"
};

/// kappa(m, n) = sum_{1 <= j < i <= l} m_i n_j  (mod 2)
uint8_t kappa(const Bits& m, const Bits& n);

/// (-1)^kappa(m, n)
int c_kappa(const Bits& m, const Bits& n);

/// Table of a normalised Z_2-valued 2-cocycle on Z_2^l. Values are stored
/// additively in Z_2; the {+1,-1} form is a presentation layer (sign()).
struct CocycleTable {
  std::size_t l = 0;
  std::vector<uint8_t> values;  // 2^l * 2^l entries, index m * 2^l + n

  static CocycleTable trivial(std::size_t l);
  static CocycleTable kappa_table(std::size_t l);

  std::size_t group_size() const { return std::size_t{1} << l; }
  uint8_t value_by_index(std::size_t mi, std::size_t ni) const {
    return values[mi * group_size() + ni];
  }
  uint8_t value(const Bits& m, const Bits& n) const;
  int sign(const Bits& m, const Bits& n) const { return value(m, n) ? -1 : 1; }
  int sign_by_index(std::size_t mi, std::size_t ni) const {
    return value_by_index(mi, ni) ? -1 : 1;
  }
  bool operator==(const CocycleTable&) const = default;
};

struct Permutation {
  std::vector<std::size_t> images;  // 0-based; sigma(i) = images[i]

  static Permutation identity(std::size_t l);
  static Permutation from_images(std::vector<std::size_t> images);  // validates
  std::size_t size() const { return images.size(); }
};

/// kappa^sigma(m, n) = kappa(m^sigma, n^sigma) with (m^sigma)_i = m_{sigma(i)}.
CocycleTable permute_kappa(const CocycleTable& k, const Permutation& s);

/// chi_c(m, n) = c(m, n) * c(n, m); a coboundary invariant.
int bicharacter(const CocycleTable& c, const Bits& m, const Bits& n);

struct CocycleCheck {
  bool ok = true;
  std::string counterexample;
};

/// Exhaustive check of the normalised 2-cocycle identity
///   f(m,n) + f(m+n,o) = f(n,o) + f(m,n+o)
/// over the whole group, plus the normalisation f(0,.) = f(.,0) = 0.
CocycleCheck verify_cocycle(const CocycleTable& f);

/// b : Z_2^l -> {+1,-1} with b(0) = +1, stored additively.
struct CoboundaryMap {
  std::size_t l = 0;
  std::vector<uint8_t> b;  // 2^l entries, b[0] = 0

  int sign_at(const Bits& m) const { return b[m.index()] ? -1 : 1; }
};

/// Smallest (lexicographic over Bits, zero-first) b with
/// c2(m,n) = c1(m,n) b(m) b(m+n)^{-1} b(n) for all m, n, if one exists.
/// Brute force over 2^(2^l - 1) normalised maps; l <= 4.
std::optional<CoboundaryMap> find_coboundary(const CocycleTable& c1,
                                             const CocycleTable& c2);

/// The degree cocycle of a P-graph for P = N^k x Z_2^l:
/// c(da, db) = c_kappa(rho(da), rho(db)) where rho reduces every coordinate
/// mod 2, ordering the N^k coordinates before the Z_2^l ones.
int c_lambda(std::size_t k, std::size_t l, const std::vector<long long>& free_a,
             const Bits& tor_a, const std::vector<long long>& free_b,
             const Bits& tor_b);

/// Mod-2 reduction rho of a degree in N^k x Z_2^l.
Bits reduce_degree(std::size_t k, std::size_t l, const std::vector<long long>& free_part,
                   const Bits& torsion_part);

/// Exhaustively verifies, over all mod-2 degree vectors, the factorisation
///   c_{PxQ}((a,b),(a',b')) = c_P(a,a') c_Q(b,b') (-1)^{|b| |a'|}
/// where |.| is total degree parity and the product concatenates the P
/// coordinates before the Q coordinates.
bool product_sign_identity(std::size_t k, std::size_t a, std::size_t l, std::size_t b);

}  // namespace gkt
