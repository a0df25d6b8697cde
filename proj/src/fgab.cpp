#include "fgab.hpp"

#include <sstream>

namespace gkt {

Int FgAbGroup::order() const {
  if (!is_finite()) fail(ErrorKind::Invalid, "order of an infinite group");
  Int n = 1;
  for (const Int& d : torsion) n *= d;
  return n;
}

std::string FgAbGroup::text() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " (+) ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

FgAbGroup FgAbGroup::cyclic(long n) {
  if (n < 0) n = -n;
  if (n == 1) return trivial();
  if (n == 0) return free_of_rank(1);
  return {0, {Int(n)}};
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  // Renormalise the merged torsion via SNF of a diagonal relation matrix.
  std::size_t t = a.torsion.size() + b.torsion.size();
  ZMatrix rel(t, t);
  std::size_t i = 0;
  for (const Int& d : a.torsion) rel.at(i, i) = d, ++i;
  for (const Int& d : b.torsion) rel.at(i, i) = d, ++i;
  FgAbGroup merged = normal_form(Presentation(t, rel));
  merged.free_rank += a.free_rank + b.free_rank;
  return merged;
}

Presentation::Presentation(std::size_t n, ZMatrix r) : generators(n), relations(std::move(r)) {
  if (relations.rows() != generators)
    fail(ErrorKind::DimensionMismatch, "relation matrix must have one row per generator");
}

Presentation presentation_of(const FgAbGroup& g) {
  std::size_t n = g.free_rank + g.torsion.size();
  ZMatrix rel(n, g.torsion.size());
  for (std::size_t i = 0; i < g.torsion.size(); ++i) rel.at(i, i) = g.torsion[i];
  return {n, rel};
}

FgAbGroup normal_form(const Presentation& p) {
  SnfDecomposition s = snf(p.relations);
  FgAbGroup g;
  std::size_t rk = 0;
  for (const Int& d : s.diagonal()) {
    if (d == 0) continue;
    ++rk;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = p.generators - rk;
  return g;
}

FgAbHom FgAbHom::make(Presentation domain, Presentation codomain, ZMatrix lift) {
  if (lift.rows() != codomain.generators || lift.cols() != domain.generators)
    fail(ErrorKind::IllFormedHom, "lift has wrong shape for the presentations");
  // Well-definedness: lift * (domain relations) lands in the codomain
  // relation lattice.
  HnfResult span = hnf_with_transform(codomain.relations);
  ZMatrix image = lift * domain.relations;
  for (std::size_t j = 0; j < image.cols(); ++j) {
    if (!in_column_span(span, image.column(j)))
      fail(ErrorKind::IllFormedHom,
           "lift does not map domain relations into codomain relations");
  }
  FgAbHom h;
  h.domain = std::move(domain);
  h.codomain = std::move(codomain);
  h.lift = std::move(lift);
  return h;
}

FgAbHom FgAbHom::identity(const Presentation& p) {
  FgAbHom h;
  h.domain = p;
  h.codomain = p;
  h.lift = ZMatrix::identity(p.generators);
  return h;
}

FgAbHom FgAbHom::endo(const Presentation& p, ZMatrix lift) {
  return make(p, p, std::move(lift));
}

FgAbGroup coker(const FgAbHom& h) {
  return normal_form(Presentation(h.codomain.generators, h.lift.hstack(h.codomain.relations)));
}

FgAbGroup ker(const FgAbHom& h) {
  // The preimage lattice L = { x : lift x in im(codomain relations) } is the
  // projection to domain coordinates of ker [lift | -relations].
  ZMatrix combined = h.lift.hstack(h.codomain.relations.negated());
  ZMatrix k = kernel_basis(combined);
  ZMatrix proj = k.submatrix(0, 0, h.domain.generators, k.cols());
  HnfResult lattice = hnf_with_transform(proj);
  std::size_t s = lattice.pivots.size();

  // Express the domain relations in the lattice basis (the pivot columns).
  ZMatrix rel(s, h.domain.relations.cols());
  for (std::size_t j = 0; j < h.domain.relations.cols(); ++j) {
    auto z = solve_in_hnf_span(lattice, h.domain.relations.column(j));
    if (!z) fail(ErrorKind::IllFormedHom, "domain relation escapes the kernel lattice");
    for (std::size_t i = 0; i < s; ++i) rel.at(i, j) = (*z)[lattice.pivots[i].second];
  }
  return normal_form(Presentation(s, rel));
}

FgAbHom compose(const FgAbHom& g, const FgAbHom& h) {
  if (!(h.codomain == g.domain))
    fail(ErrorKind::DomainMismatch, "compose: codomain of inner map differs from domain of outer map");
  return FgAbHom::make(h.domain, g.codomain, g.lift * h.lift);
}

std::string LimitClassification::text() const {
  switch (kind) {
    case Kind::Stable: return "Stable: " + stable->text();
    case Kind::Zero: return "Zero";
    case Kind::NonFinitelyGenerated:
      return "NonFinitelyGenerated: rational rank " + std::to_string(rational_rank);
  }
  return "";
}

LimitClassification direct_limit_stationary(const Presentation& g, const FgAbHom& f) {
  if (!f.is_endo() || !(f.domain == g))
    fail(ErrorKind::IllFormedHom, "stationary limit requires an endomorphism of the given group");

  LimitClassification out;
  if (ker(f).is_trivial() && coker(f).is_trivial()) {
    out.kind = LimitClassification::Kind::Stable;
    out.stable = normal_form(g);
    return out;
  }

  const ZMatrix& s = g.relations;
  const std::size_t rank_s = rank(s);

  // Rational phase: the rank of im(f^m) + relations stabilises within
  // generators steps.
  ZMatrix power = f.lift;
  std::size_t r_prev = rank(power.hstack(s));
  for (;;) {
    ZMatrix next = power * f.lift;
    std::size_t r_next = rank(next.hstack(s));
    if (r_next == r_prev) break;
    power = next;
    r_prev = r_next;
  }

  if (r_prev == rank_s) {
    // The eventual image is finite; descend the image lattice until it
    // stabilises. Each strict step shrinks a finite index, so this stops.
    ZMatrix rel_lattice = lattice_canonical_basis(s);
    ZMatrix cur = lattice_canonical_basis(power.hstack(s));
    for (;;) {
      if (cur == rel_lattice) {
        out.kind = LimitClassification::Kind::Zero;  // some power is the zero endomorphism
        return out;
      }
      ZMatrix next = lattice_canonical_basis((f.lift * cur).hstack(s));
      if (next == cur) break;  // nonzero stable image: not nilpotent
      cur = next;
    }
  }

  // Not an isomorphism and no power vanishes: flag the limit rather than
  // classify it, reporting the stabilised rank of the lift powers.
  ZMatrix p = f.lift;
  std::size_t rk = rank(p);
  for (;;) {
    p = p * f.lift;
    std::size_t rk_next = rank(p);
    if (rk_next == rk) break;
    rk = rk_next;
  }
  out.kind = LimitClassification::Kind::NonFinitelyGenerated;
  out.rational_rank = rk;
  return out;
}

std::string ExtensionResult::text() const {
  if (resolved) return resolved->text();
  return "extension of " + quot.text() + " by " + sub.text() + " (" + split_reason + ")";
}

ExtensionResult resolve_extension(const FgAbGroup& sub, const FgAbGroup& quot) {
  ExtensionResult out;
  out.sub = sub;
  out.quot = quot;
  if (sub.is_trivial() || quot.is_trivial()) {
    out.resolved = direct_sum(sub, quot);
    out.split_reason = "one end is trivial";
  } else if (quot.is_free()) {
    out.resolved = direct_sum(sub, quot);
    out.split_reason = "free quotient splits";
  } else {
    out.split_reason = "torsion quotient: the extension need not split";
  }
  return out;
}

}  // namespace gkt
