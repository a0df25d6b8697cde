#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snf.hpp"

namespace gkt {

/// Finitely generated abelian group in invariant-factor normal form.
/// Two values are equal iff the groups are isomorphic.
struct FgAbGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // each >= 2, d1 | d2 | ...

  bool operator==(const FgAbGroup&) const = default;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  Int order() const;  // product of torsion factors; finite groups only

  /// "0", "Z", "Z^2 (+) Z/2", ...
  std::string text() const;

  static FgAbGroup trivial() { return {}; }
  static FgAbGroup free_of_rank(std::size_t r) { return {r, {}}; }
  static FgAbGroup cyclic(long n);
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Z^n / im(R); the columns of the relation matrix are the relators.
struct Presentation {
  std::size_t generators = 0;
  ZMatrix relations;  // generators x m

  Presentation() : relations(0, 0) {}
  Presentation(std::size_t n, ZMatrix r);

  bool operator==(const Presentation&) const = default;

  static Presentation free_group(std::size_t n) { return {n, ZMatrix(n, 0)}; }
};

/// Canonical presentation of a group in normal form (diagonal relations).
Presentation presentation_of(const FgAbGroup& g);

FgAbGroup normal_form(const Presentation& p);

/// Homomorphism between presented groups, given by a lift on generators.
/// Construction verifies well-definedness: lift maps the domain relation
/// lattice into the codomain relation lattice.
struct FgAbHom {
  Presentation domain;
  Presentation codomain;
  ZMatrix lift;  // codomain.generators x domain.generators

  static FgAbHom make(Presentation domain, Presentation codomain, ZMatrix lift);
  static FgAbHom identity(const Presentation& p);
  static FgAbHom endo(const Presentation& p, ZMatrix lift);

  bool is_endo() const { return domain == codomain; }
};

FgAbGroup coker(const FgAbHom& h);
FgAbGroup ker(const FgAbHom& h);

/// g after h; the codomain of h must equal the domain of g exactly.
FgAbHom compose(const FgAbHom& g, const FgAbHom& h);

/// Classification of lim(G -f-> G -f-> ...).
struct LimitClassification {
  enum class Kind { Stable, Zero, NonFinitelyGenerated };
  Kind kind = Kind::Zero;
  std::optional<FgAbGroup> stable;  // present iff Stable
  std::size_t rational_rank = 0;    // meaningful iff NonFinitelyGenerated

  bool operator==(const LimitClassification&) const = default;
  std::string text() const;
};

LimitClassification direct_limit_stationary(const Presentation& g, const FgAbHom& f);

/// Outcome of 0 -> sub -> E -> quot -> 0. `resolved` is present exactly when
/// the extension is forced to split (free quotient, or a trivial end).
struct ExtensionResult {
  FgAbGroup sub;
  FgAbGroup quot;
  std::optional<FgAbGroup> resolved;
  std::string split_reason;

  std::string text() const;
};

ExtensionResult resolve_extension(const FgAbGroup& sub, const FgAbGroup& quot);

}  // namespace gkt
