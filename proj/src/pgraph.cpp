#include "pgraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace gkt {

DegreeElem DegreeElem::zero(std::size_t k, std::size_t l) {
  DegreeElem d;
  d.free_part.assign(k, 0);
  d.torsion_part = Bits::zero(l);
  return d;
}

DegreeElem DegreeElem::free_unit(std::size_t k, std::size_t l, std::size_t color) {
  DegreeElem d = zero(k, l);
  if (color >= k) fail(ErrorKind::DimensionMismatch, "color index out of range");
  d.free_part[color] = 1;
  return d;
}

DegreeElem DegreeElem::torsion_unit(std::size_t k, std::size_t l, std::size_t gen) {
  DegreeElem d = zero(k, l);
  if (gen >= l) fail(ErrorKind::DimensionMismatch, "torsion generator index out of range");
  d.torsion_part.coords[gen] = 1;
  return d;
}

DegreeElem DegreeElem::operator+(const DegreeElem& o) const {
  if (k() != o.k() || l() != o.l())
    fail(ErrorKind::DimensionMismatch, "adding degrees from different monoids");
  DegreeElem d = *this;
  for (std::size_t i = 0; i < free_part.size(); ++i) d.free_part[i] += o.free_part[i];
  d.torsion_part = torsion_part + o.torsion_part;
  return d;
}

bool DegreeElem::is_zero() const {
  return torsion_part.is_zero() &&
         std::all_of(free_part.begin(), free_part.end(), [](long long x) { return x == 0; });
}

std::string DegreeElem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < free_part.size(); ++i) {
    if (i) os << ",";
    os << free_part[i];
  }
  os << ";";
  for (std::size_t i = 0; i < torsion_part.size(); ++i) {
    if (i) os << ",";
    os << int(torsion_part.coords[i]);
  }
  os << ")";
  return os.str();
}

uint8_t delta_lambda(const DegreeElem& d) {
  uint8_t p = d.torsion_part.parity();
  for (long long x : d.free_part) p ^= static_cast<uint8_t>(x & 1);
  return p;
}

int c_lambda(const DegreeElem& a, const DegreeElem& b) {
  if (a.k() != b.k() || a.l() != b.l())
    fail(ErrorKind::DimensionMismatch, "degrees from different monoids");
  return c_lambda(a.k(), a.l(), a.free_part, a.torsion_part, b.free_part, b.torsion_part);
}

// ---------------------------------------------------------------------------

OneGraph::OneGraph(std::vector<std::string> vertices, std::vector<OneGraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second)
      fail(ErrorKind::Invalid, "duplicate vertex id: " + vertices_[i]);
  }
  std::set<std::string> edge_ids;
  for (const OneGraphEdge& e : edges_) {
    if (!edge_ids.insert(e.id).second)
      fail(ErrorKind::Invalid, "duplicate edge id: " + e.id);
    if (!vertex_index_.count(e.source))
      fail(ErrorKind::Invalid, "edge " + e.id + " has unknown source " + e.source);
    if (!vertex_index_.count(e.range))
      fail(ErrorKind::Invalid, "edge " + e.id + " has unknown range " + e.range);
  }
}

std::size_t OneGraph::vertex_index(const std::string& v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) fail(ErrorKind::Invalid, "unknown vertex: " + v);
  return it->second;
}

DeltaLabeling DeltaLabeling::zero(const OneGraph& g) {
  DeltaLabeling d;
  for (const OneGraphEdge& e : g.edges()) d.values[e.id] = 0;
  return d;
}

uint8_t DeltaLabeling::at(const std::string& edge_id) const {
  auto it = values.find(edge_id);
  if (it == values.end())
    fail(ErrorKind::MissingLabel, "no delta label for edge " + edge_id);
  return it->second;
}

void DeltaLabeling::require_total(const OneGraph& g) const {
  for (const OneGraphEdge& e : g.edges()) at(e.id);
}

GraphChecks graph_checks(const OneGraph& g) {
  GraphChecks c;
  std::vector<bool> receives(g.vertices().size(), false);
  std::vector<bool> emits(g.vertices().size(), false);
  for (const OneGraphEdge& e : g.edges()) {
    receives[g.vertex_index(e.range)] = true;
    emits[g.vertex_index(e.source)] = true;
  }
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    if (!receives[i]) c.no_sources = false;
    if (!emits[i]) c.no_sinks = false;
  }
  return c;
}

// ---------------------------------------------------------------------------

KGraphSkeleton::KGraphSkeleton(std::size_t k, std::vector<std::string> vertices,
                               std::vector<std::vector<ColoredEdge>> edges_by_color,
                               std::vector<Square> squares)
    : k_(k),
      vertices_(std::move(vertices)),
      edges_by_color_(std::move(edges_by_color)),
      squares_(std::move(squares)) {
  if (edges_by_color_.size() != k_)
    fail(ErrorKind::Invalid, "expected one edge list per color");
  std::set<std::string> vset;
  for (const std::string& v : vertices_)
    if (!vset.insert(v).second) fail(ErrorKind::Invalid, "duplicate vertex id: " + v);
  for (std::size_t c = 0; c < k_; ++c) {
    for (std::size_t i = 0; i < edges_by_color_[c].size(); ++i) {
      const ColoredEdge& e = edges_by_color_[c][i];
      if (!edge_index_.emplace(e.id, std::make_pair(c, i)).second)
        fail(ErrorKind::Invalid, "duplicate edge id: " + e.id);
      if (!vset.count(e.source))
        fail(ErrorKind::Invalid, "edge " + e.id + " has unknown source " + e.source);
      if (!vset.count(e.range))
        fail(ErrorKind::Invalid, "edge " + e.id + " has unknown range " + e.range);
    }
  }
  for (const Square& sq : squares_) {
    for (const std::string* id : {&sq.e, &sq.f, &sq.f2, &sq.e2})
      if (!edge_index_.count(*id))
        fail(ErrorKind::Invalid, "square references unknown edge " + *id);
    fwd_[{sq.e, sq.f}] = {sq.f2, sq.e2};
    bwd_[{sq.f2, sq.e2}] = {sq.e, sq.f};
  }
}

bool KGraphSkeleton::has_vertex(const std::string& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

const ColoredEdge& KGraphSkeleton::edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) fail(ErrorKind::Invalid, "unknown edge: " + id);
  return edges_by_color_[it->second.first][it->second.second];
}

std::size_t KGraphSkeleton::edge_color(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) fail(ErrorKind::Invalid, "unknown edge: " + id);
  return it->second.first;
}

std::size_t KGraphSkeleton::edge_count() const {
  std::size_t n = 0;
  for (const auto& ec : edges_by_color_) n += ec.size();
  return n;
}

std::optional<std::pair<std::string, std::string>> KGraphSkeleton::flip_up(
    const std::string& e, const std::string& f) const {
  auto it = fwd_.find({e, f});
  if (it == fwd_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<std::string, std::string>> KGraphSkeleton::flip_down(
    const std::string& f2, const std::string& e2) const {
  auto it = bwd_.find({f2, e2});
  if (it == bwd_.end()) return std::nullopt;
  return it->second;
}

SkeletonDiagnostics validate_skeleton(const KGraphSkeleton& s) {
  SkeletonDiagnostics diag;
  auto report = [&](const std::string& p) {
    diag.ok = false;
    diag.problems.push_back(p);
  };

  // Well-formedness of each square and the key/value multiplicity.
  std::map<std::pair<std::string, std::string>, int> key_count, value_count;
  for (const Square& sq : s.squares()) {
    std::size_t ci = s.edge_color(sq.e), cj = s.edge_color(sq.f);
    if (ci >= cj) {
      report("square (" + sq.e + "," + sq.f + "," + sq.f2 + "," + sq.e2 +
             "): colors must satisfy color(e) < color(f)");
      continue;
    }
    if (s.edge_color(sq.e2) != ci || s.edge_color(sq.f2) != cj) {
      report("square (" + sq.e + "," + sq.f + "," + sq.f2 + "," + sq.e2 +
             "): flipped pair has wrong colors");
      continue;
    }
    const ColoredEdge& e = s.edge(sq.e);
    const ColoredEdge& f = s.edge(sq.f);
    const ColoredEdge& f2 = s.edge(sq.f2);
    const ColoredEdge& e2 = s.edge(sq.e2);
    if (e.source != f.range)
      report("square pair (" + sq.e + "," + sq.f + ") is not composable");
    if (f2.source != e2.range)
      report("square pair (" + sq.f2 + "," + sq.e2 + ") is not composable");
    if (e.range != f2.range)
      report("square (" + sq.e + "," + sq.f + "," + sq.f2 + "," + sq.e2 +
             ") does not preserve the range");
    if (f.source != e2.source)
      report("square (" + sq.e + "," + sq.f + "," + sq.f2 + "," + sq.e2 +
             ") does not preserve the source");
    ++key_count[{sq.e, sq.f}];
    ++value_count[{sq.f2, sq.e2}];
  }
  for (const auto& [k, n] : key_count)
    if (n > 1) report("pair (" + k.first + "," + k.second + ") factors through several squares");
  for (const auto& [k, n] : value_count)
    if (n > 1) report("pair (" + k.first + "," + k.second + ") appears as several square flips");

  // Every composable bi-colored pair must appear on each side.
  for (std::size_t ci = 0; ci < s.k(); ++ci) {
    for (std::size_t cj = ci + 1; cj < s.k(); ++cj) {
      for (const ColoredEdge& e : s.edges_by_color()[ci]) {
        for (const ColoredEdge& f : s.edges_by_color()[cj]) {
          if (e.source == f.range && !key_count.count({e.id, f.id}))
            report("composable pair (" + e.id + "," + f.id + ") has no square");
          if (f.source == e.range && !value_count.count({f.id, e.id}))
            report("composable pair (" + f.id + "," + e.id + ") is not the flip of any square");
        }
      }
    }
  }
  if (!diag.ok) return diag;

  // Cube condition: both ways of fully transposing a tri-colored path agree.
  for (std::size_t ci = 0; ci < s.k(); ++ci) {
    for (std::size_t cj = ci + 1; cj < s.k(); ++cj) {
      for (std::size_t cm = cj + 1; cm < s.k(); ++cm) {
        for (const ColoredEdge& a : s.edges_by_color()[ci]) {
          for (const ColoredEdge& b : s.edges_by_color()[cj]) {
            if (a.source != b.range) continue;
            for (const ColoredEdge& c : s.edges_by_color()[cm]) {
              if (b.source != c.range) continue;
              using Flip = std::optional<std::pair<std::string, std::string>>;
              // route 1: flip (b,c), then (a,.), then (.,.)
              Flip bc = s.flip_up(b.id, c.id);
              Flip ac1 = bc ? s.flip_up(a.id, bc->first) : Flip{};
              Flip a1b1 = ac1 ? s.flip_up(ac1->second, bc->second) : Flip{};
              // route 2: flip (a,b) first
              Flip ab = s.flip_up(a.id, b.id);
              Flip a1c = ab ? s.flip_up(ab->second, c.id) : Flip{};
              Flip b1c1 = a1c ? s.flip_up(ab->first, a1c->first) : Flip{};
              if (!a1b1 || !b1c1) {
                report("missing square while transposing path (" + a.id + "," +
                       b.id + "," + c.id + ")");
                return diag;
              }
              bool agree = ac1->first == b1c1->first &&
                           a1b1->first == b1c1->second &&
                           a1b1->second == a1c->second;
              if (!agree) {
                report("cube condition fails on path (" + a.id + "," + b.id +
                       "," + c.id + ")");
                return diag;
              }
            }
          }
        }
      }
    }
  }
  return diag;
}

FiniteAbelianAction FiniteAbelianAction::trivial(const KGraphSkeleton& s, std::size_t l) {
  FiniteAbelianAction a;
  a.l = l;
  GeneratorAction g;
  for (const std::string& v : s.vertices()) g.vertex_map[v] = v;
  for (const auto& ec : s.edges_by_color())
    for (const ColoredEdge& e : ec) g.edge_map[e.id] = e.id;
  a.generators.assign(l, g);
  return a;
}

namespace {

std::string map_at(const std::map<std::string, std::string>& m, const std::string& key,
                   const char* what) {
  auto it = m.find(key);
  if (it == m.end())
    fail(ErrorKind::InvalidAction, std::string("action does not map ") + what + " " + key);
  return it->second;
}

}  // namespace

void validate_action(const KGraphSkeleton& s, const FiniteAbelianAction& a) {
  if (a.generators.size() != a.l)
    fail(ErrorKind::InvalidAction, "expected one generator action per Z_2 factor");
  for (std::size_t gi = 0; gi < a.l; ++gi) {
    const GeneratorAction& g = a.generators[gi];
    std::set<std::string> vimage, eimage;
    for (const std::string& v : s.vertices()) {
      std::string w = map_at(g.vertex_map, v, "vertex");
      if (!s.has_vertex(w))
        fail(ErrorKind::InvalidAction, "vertex image " + w + " is not a vertex");
      if (!vimage.insert(w).second)
        fail(ErrorKind::InvalidAction, "vertex map is not injective at " + w);
    }
    for (const auto& ec : s.edges_by_color()) {
      for (const ColoredEdge& e : ec) {
        std::string f = map_at(g.edge_map, e.id, "edge");
        if (!eimage.insert(f).second)
          fail(ErrorKind::InvalidAction, "edge map is not injective at " + f);
        if (s.edge_color(f) != s.edge_color(e.id))
          fail(ErrorKind::InvalidAction, "edge map does not preserve color at " + e.id);
        const ColoredEdge& fe = s.edge(f);
        if (fe.range != map_at(g.vertex_map, e.range, "vertex") ||
            fe.source != map_at(g.vertex_map, e.source, "vertex"))
          fail(ErrorKind::InvalidAction,
               "edge map is not range/source equivariant at " + e.id);
      }
    }
    // involutive
    for (const std::string& v : s.vertices())
      if (map_at(g.vertex_map, map_at(g.vertex_map, v, "vertex"), "vertex") != v)
        fail(ErrorKind::InvalidAction, "generator action does not square to the identity");
    for (const auto& ec : s.edges_by_color())
      for (const ColoredEdge& e : ec)
        if (map_at(g.edge_map, map_at(g.edge_map, e.id, "edge"), "edge") != e.id)
          fail(ErrorKind::InvalidAction, "generator action does not square to the identity");
    // squares to squares
    for (const Square& sq : s.squares()) {
      auto img = s.flip_up(map_at(g.edge_map, sq.e, "edge"), map_at(g.edge_map, sq.f, "edge"));
      if (!img || img->first != map_at(g.edge_map, sq.f2, "edge") ||
          img->second != map_at(g.edge_map, sq.e2, "edge"))
        fail(ErrorKind::InvalidAction, "generator action does not map squares to squares");
    }
  }
  // pairwise commuting
  for (std::size_t i = 0; i < a.l; ++i) {
    for (std::size_t j = i + 1; j < a.l; ++j) {
      const GeneratorAction& gi = a.generators[i];
      const GeneratorAction& gj = a.generators[j];
      for (const std::string& v : s.vertices())
        if (map_at(gi.vertex_map, map_at(gj.vertex_map, v, "vertex"), "vertex") !=
            map_at(gj.vertex_map, map_at(gi.vertex_map, v, "vertex"), "vertex"))
          fail(ErrorKind::InvalidAction, "generator actions do not commute");
      for (const auto& ec : s.edges_by_color())
        for (const ColoredEdge& e : ec)
          if (map_at(gi.edge_map, map_at(gj.edge_map, e.id, "edge"), "edge") !=
              map_at(gj.edge_map, map_at(gi.edge_map, e.id, "edge"), "edge"))
            fail(ErrorKind::InvalidAction, "generator actions do not commute");
    }
  }
}

std::string PGraphPresentation::apply_action_vertex(const Bits& g, const std::string& v) const {
  std::string out = v;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.coords[i]) out = action.generators[i].vertex_map.at(out);
  return out;
}

std::string PGraphPresentation::apply_action_edge(const Bits& g, const std::string& e) const {
  std::string out = e;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.coords[i]) out = action.generators[i].edge_map.at(out);
  return out;
}

PGraphPresentation crossed_product(const KGraphSkeleton& gamma,
                                   const FiniteAbelianAction& rho) {
  SkeletonDiagnostics diag = validate_skeleton(gamma);
  if (!diag.ok) fail(ErrorKind::Invalid, "invalid skeleton: " + diag.problems.front());
  validate_action(gamma, rho);
  return {gamma, rho};
}

namespace {

std::string bits_string(const Bits& g) {
  std::string s;
  for (uint8_t c : g.coords) s += (c ? '1' : '0');
  return s;
}

std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

PGraphPresentation cartesian_product(const PGraphPresentation& a,
                                     const PGraphPresentation& b) {
  const KGraphSkeleton& sa = a.skeleton;
  const KGraphSkeleton& sb = b.skeleton;
  std::size_t ka = sa.k(), kb = sb.k();

  std::vector<std::string> vertices;
  for (const std::string& va : sa.vertices())
    for (const std::string& vb : sb.vertices()) vertices.push_back(pair_id(va, vb));

  std::vector<std::vector<ColoredEdge>> edges(ka + kb);
  for (std::size_t c = 0; c < ka; ++c)
    for (const ColoredEdge& e : sa.edges_by_color()[c])
      for (const std::string& vb : sb.vertices())
        edges[c].push_back({pair_id(e.id, vb), pair_id(e.source, vb), pair_id(e.range, vb)});
  for (std::size_t c = 0; c < kb; ++c)
    for (const ColoredEdge& e : sb.edges_by_color()[c])
      for (const std::string& va : sa.vertices())
        edges[ka + c].push_back({pair_id(va, e.id), pair_id(va, e.source), pair_id(va, e.range)});

  std::vector<Square> squares;
  for (const Square& sq : sa.squares())
    for (const std::string& vb : sb.vertices())
      squares.push_back({pair_id(sq.e, vb), pair_id(sq.f, vb), pair_id(sq.f2, vb),
                         pair_id(sq.e2, vb)});
  for (const Square& sq : sb.squares())
    for (const std::string& va : sa.vertices())
      squares.push_back({pair_id(va, sq.e), pair_id(va, sq.f), pair_id(va, sq.f2),
                         pair_id(va, sq.e2)});
  // Mixed squares (e, r(f)) (s(e), f) = (r(e), f) (e, s(f)).
  for (std::size_t ca = 0; ca < ka; ++ca)
    for (const ColoredEdge& e : sa.edges_by_color()[ca])
      for (std::size_t cb = 0; cb < kb; ++cb)
        for (const ColoredEdge& f : sb.edges_by_color()[cb])
          squares.push_back({pair_id(e.id, f.range), pair_id(e.source, f.id),
                             pair_id(e.range, f.id), pair_id(e.id, f.source)});

  KGraphSkeleton skel(ka + kb, std::move(vertices), std::move(edges), std::move(squares));

  FiniteAbelianAction act;
  act.l = a.l() + b.l();
  for (std::size_t gi = 0; gi < a.l(); ++gi) {
    GeneratorAction g;
    const GeneratorAction& ga = a.action.generators[gi];
    for (const std::string& va : sa.vertices())
      for (const std::string& vb : sb.vertices())
        g.vertex_map[pair_id(va, vb)] = pair_id(ga.vertex_map.at(va), vb);
    for (const auto& ec : sa.edges_by_color())
      for (const ColoredEdge& e : ec)
        for (const std::string& vb : sb.vertices())
          g.edge_map[pair_id(e.id, vb)] = pair_id(ga.edge_map.at(e.id), vb);
    for (const auto& ec : sb.edges_by_color())
      for (const ColoredEdge& e : ec)
        for (const std::string& va : sa.vertices())
          g.edge_map[pair_id(va, e.id)] = pair_id(ga.vertex_map.at(va), e.id);
    act.generators.push_back(std::move(g));
  }
  for (std::size_t gi = 0; gi < b.l(); ++gi) {
    GeneratorAction g;
    const GeneratorAction& gb = b.action.generators[gi];
    for (const std::string& va : sa.vertices())
      for (const std::string& vb : sb.vertices())
        g.vertex_map[pair_id(va, vb)] = pair_id(va, gb.vertex_map.at(vb));
    for (const auto& ec : sa.edges_by_color())
      for (const ColoredEdge& e : ec)
        for (const std::string& vb : sb.vertices())
          g.edge_map[pair_id(e.id, vb)] = pair_id(e.id, gb.vertex_map.at(vb));
    for (const auto& ec : sb.edges_by_color())
      for (const ColoredEdge& e : ec)
        for (const std::string& va : sa.vertices())
          g.edge_map[pair_id(va, e.id)] = pair_id(va, gb.edge_map.at(e.id));
    act.generators.push_back(std::move(g));
  }
  return crossed_product(skel, act);
}

PGraphPresentation skew_product(const KGraphSkeleton& gamma,
                                const std::map<std::string, Bits>& b, std::size_t l) {
  SkeletonDiagnostics diag = validate_skeleton(gamma);
  if (!diag.ok) fail(ErrorKind::Invalid, "invalid skeleton: " + diag.problems.front());
  auto b_at = [&](const std::string& e) -> const Bits& {
    auto it = b.find(e);
    if (it == b.end()) fail(ErrorKind::MissingLabel, "no functor value for edge " + e);
    if (it->second.size() != l)
      fail(ErrorKind::DimensionMismatch, "functor value for edge " + e + " has wrong length");
    return it->second;
  };
  // b must be constant across squares to extend to a functor.
  for (const Square& sq : gamma.squares()) {
    if (!((b_at(sq.e) + b_at(sq.f)) == (b_at(sq.f2) + b_at(sq.e2))))
      fail(ErrorKind::Invalid, "functor values are not constant on square (" + sq.e + "," +
                                   sq.f + "," + sq.f2 + "," + sq.e2 + ")");
  }

  std::size_t n = std::size_t{1} << l;
  auto vid = [&](const std::string& v, const Bits& g) {
    return "(" + v + "|" + bits_string(g) + ")";
  };
  auto eid = [&](const std::string& e, const Bits& g) {
    return "(" + e + "|" + bits_string(g) + ")";
  };

  std::vector<std::string> vertices;
  for (const std::string& v : gamma.vertices())
    for (std::size_t i = 0; i < n; ++i) vertices.push_back(vid(v, Bits::from_index(l, i)));

  std::vector<std::vector<ColoredEdge>> edges(gamma.k());
  for (std::size_t c = 0; c < gamma.k(); ++c)
    for (const ColoredEdge& e : gamma.edges_by_color()[c])
      for (std::size_t i = 0; i < n; ++i) {
        Bits g = Bits::from_index(l, i);
        edges[c].push_back({eid(e.id, g), vid(e.source, g + b_at(e.id)), vid(e.range, g)});
      }

  std::vector<Square> squares;
  for (const Square& sq : gamma.squares())
    for (std::size_t i = 0; i < n; ++i) {
      Bits g = Bits::from_index(l, i);
      squares.push_back({eid(sq.e, g), eid(sq.f, g + b_at(sq.e)), eid(sq.f2, g),
                         eid(sq.e2, g + b_at(sq.f2))});
    }

  KGraphSkeleton skel(gamma.k(), std::move(vertices), std::move(edges), std::move(squares));

  FiniteAbelianAction act;
  act.l = l;
  for (std::size_t gi = 0; gi < l; ++gi) {
    GeneratorAction g;
    Bits shift = Bits::unit(l, gi);
    for (const std::string& v : gamma.vertices())
      for (std::size_t i = 0; i < n; ++i) {
        Bits h = Bits::from_index(l, i);
        g.vertex_map[vid(v, h)] = vid(v, h + shift);
      }
    for (const auto& ec : gamma.edges_by_color())
      for (const ColoredEdge& e : ec)
        for (std::size_t i = 0; i < n; ++i) {
          Bits h = Bits::from_index(l, i);
          g.edge_map[eid(e.id, h)] = eid(e.id, h + shift);
        }
    act.generators.push_back(std::move(g));
  }
  return crossed_product(skel, act);
}

// ---------------------------------------------------------------------------

bool PMorphism::operator<(const PMorphism& o) const {
  return std::tie(range, edges, g.coords) < std::tie(o.range, o.edges, o.g.coords);
}

std::string path_source(const KGraphSkeleton& s, const PMorphism& m) {
  if (m.edges.empty()) return m.range;
  return s.edge(m.edges.back()).source;
}

std::string morphism_source(const PGraphPresentation& p, const PMorphism& m) {
  return p.apply_action_vertex(m.g, path_source(p.skeleton, m));
}

DegreeElem morphism_degree(const PGraphPresentation& p, const PMorphism& m) {
  DegreeElem d = DegreeElem::zero(p.k(), p.l());
  for (const std::string& e : m.edges) d.free_part[p.skeleton.edge_color(e)] += 1;
  d.torsion_part = m.g;
  return d;
}

PMorphism vertex_morphism(const PGraphPresentation& p, const std::string& v, const Bits& g) {
  if (!p.skeleton.has_vertex(v)) fail(ErrorKind::Invalid, "unknown vertex: " + v);
  if (g.size() != p.l()) fail(ErrorKind::DimensionMismatch, "group element has wrong length");
  return {v, {}, g};
}

std::vector<std::string> normalize_path(const KGraphSkeleton& s,
                                        std::vector<std::string> edges) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      std::size_t c1 = s.edge_color(edges[i]);
      std::size_t c2 = s.edge_color(edges[i + 1]);
      if (c1 <= c2) continue;
      auto swapped = s.flip_down(edges[i], edges[i + 1]);
      if (!swapped)
        fail(ErrorKind::Invalid,
             "no square to transpose (" + edges[i] + "," + edges[i + 1] + ")");
      edges[i] = swapped->first;
      edges[i + 1] = swapped->second;
      changed = true;
    }
  }
  return edges;
}

PMorphism compose(const PGraphPresentation& p, const PMorphism& a, const PMorphism& b) {
  if (morphism_source(p, a) != b.range)
    fail(ErrorKind::NonComposableTriple, "morphisms are not composable");
  PMorphism out;
  out.range = a.range;
  out.edges = a.edges;
  for (const std::string& e : b.edges) out.edges.push_back(p.apply_action_edge(a.g, e));
  out.edges = normalize_path(p.skeleton, std::move(out.edges));
  out.g = a.g + b.g;
  return out;
}

std::pair<std::string, std::size_t> star_of(const PGraphPresentation& p,
                                            const std::string& vertex, std::size_t gen) {
  if (gen >= p.l())
    fail(ErrorKind::DegreeNotOrderTwo, "degree is not an order-two generator");
  if (!p.skeleton.has_vertex(vertex)) fail(ErrorKind::Invalid, "unknown vertex: " + vertex);
  return {p.apply_action_vertex(Bits::unit(p.l(), gen), vertex), gen};
}

// ---------------------------------------------------------------------------

FiniteCategoryTable::FiniteCategoryTable(std::size_t k, std::size_t l,
                                         std::vector<std::string> objects,
                                         std::vector<CatMorphism> morphisms,
                                         std::vector<std::array<std::string, 3>> composites)
    : k_(k), l_(l), objects_(std::move(objects)) {
  std::set<std::string> obj_set;
  for (const std::string& v : objects_) {
    if (!obj_set.insert(v).second) fail(ErrorKind::Invalid, "duplicate object id: " + v);
    morphisms_.push_back({v, DegreeElem::zero(k_, l_), v, v});
  }
  for (CatMorphism& m : morphisms) {
    if (m.degree.k() != k_ || m.degree.l() != l_)
      fail(ErrorKind::Invalid, "morphism " + m.id + " has a degree outside the monoid");
    if (m.degree.is_zero())
      fail(ErrorKind::Invalid,
           "degree-zero morphisms are the objects; found explicit " + m.id);
    for (long long x : m.degree.free_part)
      if (x < 0)
        fail(ErrorKind::Invalid, "morphism " + m.id + " has a negative free degree");
    if (!obj_set.count(m.range) || !obj_set.count(m.source))
      fail(ErrorKind::Invalid, "morphism " + m.id + " has unknown range or source");
    morphisms_.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    if (!index_.emplace(morphisms_[i].id, i).second)
      fail(ErrorKind::Invalid, "duplicate morphism id: " + morphisms_[i].id);
  }
  for (const auto& [a, b, c] : composites) {
    const CatMorphism& ma = morphism(a);
    const CatMorphism& mb = morphism(b);
    const CatMorphism& mc = morphism(c);
    if (ma.source != mb.range)
      fail(ErrorKind::Invalid, "composite (" + a + "," + b + ") is not composable");
    if (is_object(a) || is_object(b)) {
      const std::string& expect = is_object(a) ? b : a;
      if (c != expect)
        fail(ErrorKind::Invalid, "identity composition (" + a + "," + b + ") must equal " + expect);
      continue;  // identity compositions are implicit
    }
    if (mc.range != ma.range || mc.source != mb.source)
      fail(ErrorKind::Invalid, "composite of (" + a + "," + b + ") has wrong endpoints");
    if (!(mc.degree == ma.degree + mb.degree))
      fail(ErrorKind::Invalid, "composite of (" + a + "," + b + ") has wrong degree");
    if (!compose_.emplace(std::make_pair(a, b), c).second)
      fail(ErrorKind::Invalid, "duplicate composition entry (" + a + "," + b + ")");
  }
}

const CatMorphism& FiniteCategoryTable::morphism(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail(ErrorKind::Invalid, "unknown morphism: " + id);
  return morphisms_[it->second];
}

bool FiniteCategoryTable::is_object(const std::string& id) const {
  auto it = index_.find(id);
  return it != index_.end() && morphisms_[it->second].degree.is_zero();
}

std::optional<std::string> FiniteCategoryTable::compose(const std::string& a,
                                                        const std::string& b) const {
  const CatMorphism& ma = morphism(a);
  const CatMorphism& mb = morphism(b);
  if (ma.source != mb.range) return std::nullopt;
  if (is_object(a)) return b;
  if (is_object(b)) return a;
  auto it = compose_.find({a, b});
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> FiniteCategoryTable::morphisms_of_degree(const DegreeElem& d) const {
  std::vector<std::string> out;
  for (const CatMorphism& m : morphisms_)
    if (m.degree == d) out.push_back(m.id);
  return out;
}

FiniteCategoryTable enumerate_fragment(const PGraphPresentation& p,
                                       const std::vector<long long>& free_bound) {
  if (free_bound.size() != p.k())
    fail(ErrorKind::DimensionMismatch, "need one degree bound per color");
  const KGraphSkeleton& skel = p.skeleton;

  // All Gamma-paths with degree within the bound, in normal form.
  std::vector<PMorphism> paths;
  std::set<std::pair<std::string, std::vector<std::string>>> seen;
  std::deque<PMorphism> queue;
  for (const std::string& v : skel.vertices()) {
    PMorphism m{v, {}, Bits::zero(p.l())};
    queue.push_back(m);
    seen.insert({v, {}});
    paths.push_back(m);
  }
  while (!queue.empty()) {
    PMorphism m = queue.front();
    queue.pop_front();
    std::vector<long long> deg(p.k(), 0);
    for (const std::string& e : m.edges) deg[skel.edge_color(e)] += 1;
    std::string src = path_source(skel, m);
    for (std::size_t c = 0; c < p.k(); ++c) {
      if (deg[c] >= free_bound[c]) continue;
      for (const ColoredEdge& e : skel.edges_by_color()[c]) {
        if (e.range != src) continue;
        PMorphism ext = m;
        ext.edges.push_back(e.id);
        ext.edges = normalize_path(skel, std::move(ext.edges));
        if (seen.insert({ext.range, ext.edges}).second) {
          queue.push_back(ext);
          paths.push_back(ext);
        }
      }
    }
  }

  std::sort(paths.begin(), paths.end());

  // Ids: identities carry the vertex name; other morphisms spell out the
  // normal form (range:edge list|group bits).
  std::size_t ng = std::size_t{1} << p.l();
  auto name = [&](const PMorphism& m) -> std::string {
    if (m.edges.empty() && m.g.is_zero()) return m.range;
    std::string s = "(" + m.range;
    if (!m.edges.empty()) {
      s += ":";
      for (std::size_t i = 0; i < m.edges.size(); ++i) {
        if (i) s += "*";
        s += m.edges[i];
      }
    }
    if (p.l() > 0) s += "|" + bits_string(m.g);
    return s + ")";
  };

  std::vector<PMorphism> all;
  for (const PMorphism& path : paths)
    for (std::size_t i = 0; i < ng; ++i) {
      PMorphism m = path;
      m.g = Bits::from_index(p.l(), i);
      all.push_back(m);
    }

  std::vector<CatMorphism> morphisms;
  std::map<PMorphism, std::string> names;
  for (const PMorphism& m : all) {
    names[m] = name(m);
    if (m.edges.empty() && m.g.is_zero()) continue;  // identity, implicit
    morphisms.push_back({names[m], morphism_degree(p, m), m.range, morphism_source(p, m)});
  }

  std::vector<std::array<std::string, 3>> composites;
  for (const PMorphism& a : all) {
    if (a.edges.empty() && a.g.is_zero()) continue;
    DegreeElem da = morphism_degree(p, a);
    for (const PMorphism& b : all) {
      if (b.edges.empty() && b.g.is_zero()) continue;
      if (morphism_source(p, a) != b.range) continue;
      DegreeElem db = morphism_degree(p, b);
      DegreeElem sum = da + db;
      bool within = true;
      for (std::size_t c = 0; c < p.k(); ++c)
        if (sum.free_part[c] > free_bound[c]) within = false;
      if (!within) continue;
      PMorphism ab = compose(p, a, b);
      composites.push_back({names.at(a), names.at(b), names.at(ab)});
    }
  }

  return FiniteCategoryTable(p.k(), p.l(), skel.vertices(), std::move(morphisms),
                             std::move(composites));
}

Decomposition decompose(const FiniteCategoryTable& t) {
  std::size_t k = t.k(), l = t.l();

  // Singleton property for v T^{(0,g)} and T^{(0,g)} v.
  std::vector<std::vector<std::string>> unit_at_range(t.objects().size());
  std::size_t ng = std::size_t{1} << l;
  std::map<std::pair<std::string, std::size_t>, std::string> mu;  // (vertex, g index) -> morphism id
  for (std::size_t gi = 1; gi < ng; ++gi) {
    DegreeElem d = DegreeElem::zero(k, l);
    d.torsion_part = Bits::from_index(l, gi);
    auto of_degree = t.morphisms_of_degree(d);
    for (const std::string& v : t.objects()) {
      std::vector<std::string> at_range, at_source;
      for (const std::string& id : of_degree) {
        if (t.morphism(id).range == v) at_range.push_back(id);
        if (t.morphism(id).source == v) at_source.push_back(id);
      }
      if (at_range.size() != 1)
        fail(ErrorKind::NotAPGraph, "the set " + v + "T^(0," +
                                        Bits::from_index(l, gi).to_string() + ") has " +
                                        std::to_string(at_range.size()) +
                                        " elements; expected a singleton");
      if (at_source.size() != 1)
        fail(ErrorKind::NotAPGraph, "the set T^(0," + Bits::from_index(l, gi).to_string() +
                                        ")" + v + " has " + std::to_string(at_source.size()) +
                                        " elements; expected a singleton");
      mu[{v, gi}] = at_range.front();
    }
  }

  // Gamma: the zero-torsion part of the table.
  std::vector<std::vector<ColoredEdge>> edges(k);
  for (std::size_t c = 0; c < k; ++c) {
    for (const std::string& id : t.morphisms_of_degree(DegreeElem::free_unit(k, l, c))) {
      const CatMorphism& m = t.morphism(id);
      edges[c].push_back({id, m.source, m.range});
    }
  }

  std::vector<Square> squares;
  for (std::size_t ci = 0; ci < k; ++ci) {
    for (std::size_t cj = ci + 1; cj < k; ++cj) {
      for (const ColoredEdge& e : edges[ci]) {
        for (const ColoredEdge& f : edges[cj]) {
          if (e.source != f.range) continue;
          auto comp = t.compose(e.id, f.id);
          if (!comp)
            fail(ErrorKind::NotAPGraph,
                 "composable pair (" + e.id + "," + f.id + ") has no composite in the table");
          std::vector<std::pair<std::string, std::string>> flips;
          for (const ColoredEdge& f2 : edges[cj]) {
            for (const ColoredEdge& e2 : edges[ci]) {
              if (f2.source != e2.range) continue;
              auto c2 = t.compose(f2.id, e2.id);
              if (c2 && *c2 == *comp) flips.emplace_back(f2.id, e2.id);
            }
          }
          if (flips.size() != 1)
            fail(ErrorKind::NotAPGraph, "factorisation of " + *comp + " through colors (" +
                                            std::to_string(cj) + "," + std::to_string(ci) +
                                            ") is not unique");
          squares.push_back({e.id, f.id, flips.front().first, flips.front().second});
        }
      }
    }
  }

  KGraphSkeleton skel(k, t.objects(), std::move(edges), std::move(squares));

  // rho_g on vertices via the unique degree-(0,g) morphisms; on edges via
  // mu rho_g(lambda) = lambda nu.
  FiniteAbelianAction act;
  act.l = l;
  for (std::size_t gi = 0; gi < l; ++gi) {
    std::size_t g_index = Bits::unit(l, gi).index();
    GeneratorAction g;
    for (const std::string& v : t.objects()) g.vertex_map[v] = t.morphism(mu.at({v, g_index})).source;
    for (std::size_t c = 0; c < k; ++c) {
      for (const ColoredEdge& lam : skel.edges_by_color()[c]) {
        const std::string& mu_r = mu.at({lam.range, g_index});
        const std::string& nu_s = mu.at({lam.source, g_index});
        auto comp = t.compose(lam.id, nu_s);
        if (!comp)
          fail(ErrorKind::NotAPGraph,
               "composite (" + lam.id + "," + nu_s + ") is missing from the table");
        std::vector<std::string> candidates;
        for (const std::string& x : t.morphisms_of_degree(DegreeElem::free_unit(k, l, c))) {
          auto c2 = t.compose(mu_r, x);
          if (c2 && *c2 == *comp) candidates.push_back(x);
        }
        if (candidates.size() != 1)
          fail(ErrorKind::NotAPGraph, "the action image of " + lam.id +
                                          " is not determined uniquely (" +
                                          std::to_string(candidates.size()) + " candidates)");
        g.edge_map[lam.id] = candidates.front();
      }
    }
    act.generators.push_back(std::move(g));
  }

  SkeletonDiagnostics diag = validate_skeleton(skel);
  if (!diag.ok) fail(ErrorKind::NotAPGraph, "decomposed skeleton invalid: " + diag.problems.front());
  try {
    validate_action(skel, act);
  } catch (const Error& e) {
    fail(ErrorKind::NotAPGraph, std::string("decomposed action invalid: ") + e.what());
  }
  return {std::move(skel), std::move(act)};
}

std::string star_of(const FiniteCategoryTable& t, const std::string& morphism_id) {
  const CatMorphism& m = t.morphism(morphism_id);
  std::size_t weight = 0;
  for (uint8_t c : m.degree.torsion_part.coords) weight += c;
  bool unit = (weight == 1);
  for (long long x : m.degree.free_part)
    if (x != 0) unit = false;
  if (!unit)
    fail(ErrorKind::DegreeNotOrderTwo,
         "star is defined for degrees e with 2e = 0; got " + m.degree.to_string());
  std::vector<std::string> found;
  for (const std::string& x : t.morphisms_of_degree(m.degree)) {
    if (t.morphism(x).range != m.source) continue;
    auto comp = t.compose(morphism_id, x);
    if (comp && *comp == m.range) found.push_back(x);
  }
  if (found.size() != 1)
    fail(ErrorKind::NotAPGraph, "star of " + morphism_id + " is not determined uniquely");
  return found.front();
}

namespace {

CocycleCheck check_triple(const CatMorphism& a, const CatMorphism& b,
                          const CatMorphism& c) {
  CocycleCheck out;
  DegreeElem dab = a.degree + b.degree;
  DegreeElem dbc = b.degree + c.degree;
  int lhs = c_lambda(a.degree, b.degree) * c_lambda(dab, c.degree);
  int rhs = c_lambda(b.degree, c.degree) * c_lambda(a.degree, dbc);
  if (lhs != rhs) {
    out.ok = false;
    out.counterexample =
        "identity fails on (" + a.id + ", " + b.id + ", " + c.id + ")";
  }
  return out;
}

}  // namespace

CocycleCheck verify_clambda_on_table(const FiniteCategoryTable& t) {
  CocycleCheck out;
  for (const CatMorphism& m : t.morphisms()) {
    DegreeElem zero = DegreeElem::zero(t.k(), t.l());
    if (c_lambda(zero, m.degree) != 1 || c_lambda(m.degree, zero) != 1) {
      out.ok = false;
      out.counterexample = "normalisation fails at " + m.id;
      return out;
    }
  }
  for (const CatMorphism& a : t.morphisms())
    for (const CatMorphism& b : t.morphisms()) {
      if (a.source != b.range) continue;
      for (const CatMorphism& c : t.morphisms()) {
        if (b.source != c.range) continue;
        CocycleCheck ch = check_triple(a, b, c);
        if (!ch.ok) return ch;
      }
    }
  return out;
}

CocycleCheck verify_cocycle_on_triples(
    const FiniteCategoryTable& t,
    const std::vector<std::array<std::string, 3>>& triples) {
  CocycleCheck out;
  for (const auto& [ai, bi, ci] : triples) {
    const CatMorphism& a = t.morphism(ai);
    const CatMorphism& b = t.morphism(bi);
    const CatMorphism& c = t.morphism(ci);
    if (a.source != b.range || b.source != c.range)
      fail(ErrorKind::NonComposableTriple,
           "triple (" + ai + ", " + bi + ", " + ci + ") is not composable");
    CocycleCheck ch = check_triple(a, b, c);
    if (!ch.ok) return ch;
  }
  return out;
}

KGraphSkeleton skeleton_of(const OneGraph& g) {
  std::vector<ColoredEdge> edges;
  for (const OneGraphEdge& e : g.edges()) edges.push_back({e.id, e.source, e.range});
  return KGraphSkeleton(1, g.vertices(), {std::move(edges)}, {});
}

}  // namespace gkt
