#include "json_io.hpp"

#include <sstream>

namespace gkt {

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      fail(ErrorKind::Parse, "not a decimal integer: " + j.get<std::string>());
    return v;
  }
  fail(ErrorKind::Parse, "expected an integer or a decimal string");
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    fail(ErrorKind::Parse, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t count_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_number_unsigned() && !(f.is_number_integer() && f.get<long long>() >= 0))
    fail(ErrorKind::Parse, std::string("field \"") + name + "\" must be a nonnegative count");
  return f.get<std::size_t>();
}

Bits bits_from_json(const Json& j, std::size_t l) {
  if (!j.is_array() || j.size() != l)
    fail(ErrorKind::Parse, "expected an array of " + std::to_string(l) + " bits");
  Bits b = Bits::zero(l);
  for (std::size_t i = 0; i < l; ++i) {
    long long v = j.at(i).get<long long>();
    if (v != 0 && v != 1) fail(ErrorKind::Parse, "bit entries must be 0 or 1");
    b.coords[i] = static_cast<uint8_t>(v);
  }
  return b;
}

Json bits_to_json(const Bits& b) {
  Json a = Json::array();
  for (uint8_t c : b.coords) a.push_back(int(c));
  return a;
}

}  // namespace

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::Parse, "malformed JSON input");
  return j;
}

Json matrix_to_json(const ZMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ZMatrix matrix_from_json(const Json& j) {
  std::size_t rows = count_field(j, "rows");
  std::size_t cols = count_field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows)
    fail(ErrorKind::Parse, "entries must be an array with one row per matrix row");
  ZMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries.at(i);
    if (!row.is_array() || row.size() != cols)
      fail(ErrorKind::Parse, "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(row.at(c));
  }
  return m;
}

Json group_to_json(const FgAbGroup& g) {
  Json torsion = Json::array();
  for (const Int& d : g.torsion) torsion.push_back(int_to_json(d));
  return Json{{"rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

FgAbGroup group_from_json(const Json& j) {
  FgAbGroup g;
  g.free_rank = count_field(j, "rank");
  const Json& torsion = field(j, "torsion");
  if (!torsion.is_array()) fail(ErrorKind::Parse, "torsion must be an array");
  Int prev = 0;
  for (const Json& t : torsion) {
    Int d = int_from_json(t);
    if (d < 2) fail(ErrorKind::Parse, "torsion factors must be >= 2");
    if (prev != 0 && d % prev != 0)
      fail(ErrorKind::Parse, "torsion factors must form a divisibility chain");
    g.torsion.push_back(d);
    prev = g.torsion.back();
  }
  return g;
}

Json pair_to_json(const GradedKPair& p) {
  return Json{{"k0", group_to_json(p.k0)}, {"k1", group_to_json(p.k1)}};
}

GradedKPair pair_from_json(const Json& j) {
  return {group_from_json(field(j, "k0")), group_from_json(field(j, "k1"))};
}

Json presentation_to_json(const Presentation& p) {
  return Json{{"generators", p.generators}, {"relations", matrix_to_json(p.relations)}};
}

Presentation presentation_from_json(const Json& j) {
  std::size_t n = count_field(j, "generators");
  ZMatrix rel = matrix_from_json(field(j, "relations"));
  if (rel.rows() != n)
    fail(ErrorKind::Parse, "relation matrix must have one row per generator");
  return {n, std::move(rel)};
}

Json graph_to_json(const OneGraph& g, const DeltaLabeling& d) {
  Json edges = Json::array();
  for (const OneGraphEdge& e : g.edges()) {
    edges.push_back(Json{{"id", e.id},
                         {"source", e.source},
                         {"range", e.range},
                         {"delta", int(d.at(e.id))}});
  }
  return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

std::pair<OneGraph, DeltaLabeling> graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) fail(ErrorKind::Parse, "vertices must be an array");
  std::vector<std::string> vertices;
  for (const Json& v : vs) vertices.push_back(v.get<std::string>());
  const Json& es = field(j, "edges");
  if (!es.is_array()) fail(ErrorKind::Parse, "edges must be an array");
  std::vector<OneGraphEdge> edges;
  DeltaLabeling delta;
  for (const Json& e : es) {
    OneGraphEdge edge{field(e, "id").get<std::string>(),
                      field(e, "source").get<std::string>(),
                      field(e, "range").get<std::string>()};
    long long d = 0;
    if (e.contains("delta")) d = e.at("delta").get<long long>();
    if (d != 0 && d != 1) fail(ErrorKind::Parse, "delta must be 0 or 1");
    delta.values[edge.id] = static_cast<uint8_t>(d);
    edges.push_back(std::move(edge));
  }
  return {OneGraph(std::move(vertices), std::move(edges)), std::move(delta)};
}

Json skeleton_to_json(const KGraphSkeleton& s) {
  Json colors = Json::array();
  for (const auto& ec : s.edges_by_color()) {
    Json edges = Json::array();
    for (const ColoredEdge& e : ec)
      edges.push_back(Json{{"id", e.id}, {"source", e.source}, {"range", e.range}});
    colors.push_back(std::move(edges));
  }
  Json squares = Json::array();
  for (const Square& sq : s.squares())
    squares.push_back(Json::array({sq.e, sq.f, sq.f2, sq.e2}));
  return Json{{"k", s.k()},
              {"vertices", s.vertices()},
              {"edges", std::move(colors)},
              {"squares", std::move(squares)}};
}

KGraphSkeleton skeleton_from_json(const Json& j) {
  std::size_t k = count_field(j, "k");
  const Json& vs = field(j, "vertices");
  std::vector<std::string> vertices;
  for (const Json& v : vs) vertices.push_back(v.get<std::string>());
  const Json& colors = field(j, "edges");
  if (!colors.is_array() || colors.size() != k)
    fail(ErrorKind::Parse, "expected one edge array per color");
  std::vector<std::vector<ColoredEdge>> edges(k);
  for (std::size_t c = 0; c < k; ++c) {
    for (const Json& e : colors.at(c)) {
      edges[c].push_back({field(e, "id").get<std::string>(),
                          field(e, "source").get<std::string>(),
                          field(e, "range").get<std::string>()});
    }
  }
  std::vector<Square> squares;
  if (j.contains("squares")) {
    for (const Json& sq : j.at("squares")) {
      if (!sq.is_array() || sq.size() != 4)
        fail(ErrorKind::Parse, "each square must be a 4-tuple [e, f, f2, e2]");
      squares.push_back({sq.at(0).get<std::string>(), sq.at(1).get<std::string>(),
                         sq.at(2).get<std::string>(), sq.at(3).get<std::string>()});
    }
  }
  return KGraphSkeleton(k, std::move(vertices), std::move(edges), std::move(squares));
}

Json action_to_json(const FiniteAbelianAction& a) {
  Json gens = Json::array();
  for (const GeneratorAction& g : a.generators) {
    Json vm = Json::object(), em = Json::object();
    for (const auto& [k, v] : g.vertex_map) vm[k] = v;
    for (const auto& [k, v] : g.edge_map) em[k] = v;
    gens.push_back(Json{{"vertices", std::move(vm)}, {"edges", std::move(em)}});
  }
  return Json{{"l", a.l}, {"generators", std::move(gens)}};
}

FiniteAbelianAction action_from_json(const Json& j) {
  FiniteAbelianAction a;
  a.l = count_field(j, "l");
  const Json& gens = field(j, "generators");
  if (!gens.is_array() || gens.size() != a.l)
    fail(ErrorKind::Parse, "expected one generator action per Z_2 factor");
  for (const Json& g : gens) {
    GeneratorAction ga;
    for (const auto& [k, v] : field(g, "vertices").items())
      ga.vertex_map[k] = v.get<std::string>();
    for (const auto& [k, v] : field(g, "edges").items())
      ga.edge_map[k] = v.get<std::string>();
    a.generators.push_back(std::move(ga));
  }
  return a;
}

Json pgraph_to_json(const PGraphPresentation& p) {
  return Json{{"skeleton", skeleton_to_json(p.skeleton)},
              {"action", action_to_json(p.action)}};
}

PGraphPresentation pgraph_from_json(const Json& j) {
  KGraphSkeleton s = skeleton_from_json(field(j, "skeleton"));
  FiniteAbelianAction a = action_from_json(field(j, "action"));
  return crossed_product(s, a);
}

Json table_to_json(const FiniteCategoryTable& t) {
  Json morphisms = Json::array();
  for (const CatMorphism& m : t.morphisms()) {
    if (m.degree.is_zero()) continue;  // objects carry the identities
    Json free = Json::array();
    for (long long x : m.degree.free_part) free.push_back(x);
    morphisms.push_back(Json{{"id", m.id},
                             {"free", std::move(free)},
                             {"torsion", bits_to_json(m.degree.torsion_part)},
                             {"range", m.range},
                             {"source", m.source}});
  }
  Json compose = Json::array();
  for (const CatMorphism& a : t.morphisms()) {
    if (a.degree.is_zero()) continue;
    for (const CatMorphism& b : t.morphisms()) {
      if (b.degree.is_zero()) continue;
      auto c = t.compose(a.id, b.id);
      if (c) compose.push_back(Json::array({a.id, b.id, *c}));
    }
  }
  return Json{{"k", t.k()},
              {"l", t.l()},
              {"objects", t.objects()},
              {"morphisms", std::move(morphisms)},
              {"compose", std::move(compose)}};
}

FiniteCategoryTable table_from_json(const Json& j) {
  std::size_t k = count_field(j, "k");
  std::size_t l = count_field(j, "l");
  std::vector<std::string> objects;
  for (const Json& v : field(j, "objects")) objects.push_back(v.get<std::string>());
  std::vector<CatMorphism> morphisms;
  for (const Json& m : field(j, "morphisms")) {
    CatMorphism cm;
    cm.id = field(m, "id").get<std::string>();
    const Json& free = field(m, "free");
    if (!free.is_array() || free.size() != k)
      fail(ErrorKind::Parse, "morphism " + cm.id + ": free degree must have length k");
    cm.degree.free_part.clear();
    for (const Json& x : free) cm.degree.free_part.push_back(x.get<long long>());
    cm.degree.torsion_part = bits_from_json(field(m, "torsion"), l);
    cm.range = field(m, "range").get<std::string>();
    cm.source = field(m, "source").get<std::string>();
    morphisms.push_back(std::move(cm));
  }
  std::vector<std::array<std::string, 3>> composites;
  for (const Json& c : field(j, "compose")) {
    if (!c.is_array() || c.size() != 3)
      fail(ErrorKind::Parse, "each composition entry must be a triple [a, b, ab]");
    composites.push_back({c.at(0).get<std::string>(), c.at(1).get<std::string>(),
                          c.at(2).get<std::string>()});
  }
  return FiniteCategoryTable(k, l, std::move(objects), std::move(morphisms),
                             std::move(composites));
}

Json cocycle_table_to_json(const CocycleTable& t) {
  Json rows = Json::array();
  std::size_t n = t.group_size();
  for (std::size_t mi = 0; mi < n; ++mi) {
    Json row = Json::array();
    for (std::size_t ni = 0; ni < n; ++ni) row.push_back(int(t.value_by_index(mi, ni)));
    rows.push_back(std::move(row));
  }
  return Json{{"l", t.l}, {"values", std::move(rows)}};
}

CocycleTable cocycle_table_from_json(const Json& j) {
  std::size_t l = count_field(j, "l");
  CocycleTable t = CocycleTable::trivial(l);
  std::size_t n = t.group_size();
  const Json& values = field(j, "values");
  if (!values.is_array() || values.size() != n)
    fail(ErrorKind::Parse, "values must be a 2^l x 2^l array");
  bool multiplicative = false;
  for (const Json& row : values)
    for (const Json& v : row)
      if (v.is_number_integer() && v.get<long long>() == -1) multiplicative = true;
  for (std::size_t mi = 0; mi < n; ++mi) {
    const Json& row = values.at(mi);
    if (!row.is_array() || row.size() != n)
      fail(ErrorKind::Parse, "values must be a 2^l x 2^l array");
    for (std::size_t ni = 0; ni < n; ++ni) {
      long long v = row.at(ni).get<long long>();
      uint8_t bit;
      if (multiplicative) {
        if (v != 1 && v != -1)
          fail(ErrorKind::Parse, "multiplicative tables take values +1/-1");
        bit = (v == -1) ? 1 : 0;
      } else {
        if (v != 0 && v != 1) fail(ErrorKind::Parse, "additive tables take values 0/1");
        bit = static_cast<uint8_t>(v);
      }
      t.values[mi * n + ni] = bit;
    }
  }
  if (t.value_by_index(0, 0) != 0)
    fail(ErrorKind::Parse, "cocycle tables must be normalised");
  return t;
}

Json coboundary_to_json(const CoboundaryMap& b) {
  Json signs = Json::array();
  for (std::size_t i = 0; i < b.b.size(); ++i) signs.push_back(b.b[i] ? -1 : 1);
  return Json{{"l", b.l}, {"b", std::move(signs)}};
}

PvProblem pv_problem_from_json(const Json& j) {
  PvProblem p;
  p.g0 = presentation_from_json(field(j, "g0"));
  p.g1 = presentation_from_json(field(j, "g1"));
  auto endo = [&](const char* name, const Presentation& g, bool id_allowed) {
    const Json& f = field(j, name);
    if (f.is_string() && f.get<std::string>() == "id") {
      if (!id_allowed) fail(ErrorKind::Parse, std::string(name) + " cannot be \"id\"");
      return ZMatrix::identity(g.generators);
    }
    return matrix_from_json(f);
  };
  p.alpha0 = endo("alpha0", p.g0, true);
  p.alpha1 = endo("alpha1", p.g1, true);
  const Json& g0 = field(j, "gamma0");
  p.gamma0 = (g0.is_string() && g0.get<std::string>() == "id")
                 ? ZMatrix::identity(p.g0.generators)
                 : matrix_from_json(g0);
  const Json& g1 = field(j, "gamma1");
  p.gamma1 = (g1.is_string() && g1.get<std::string>() == "id")
                 ? ZMatrix::identity(p.g1.generators)
                 : matrix_from_json(g1);
  long long k = field(j, "k").get<long long>();
  if (k != 0 && k != 1) fail(ErrorKind::Parse, "k must be 0 or 1");
  p.k = static_cast<int>(k);
  return p;
}

Json extension_to_json(const ExtensionResult& e) {
  Json out{{"sub", group_to_json(e.sub)},
           {"quot", group_to_json(e.quot)},
           {"split_reason", e.split_reason}};
  out["resolved"] = e.resolved ? group_to_json(*e.resolved) : Json(nullptr);
  return out;
}

Json pv_solution_to_json(const PvSolution& s) {
  return Json{{"k0", extension_to_json(s.k0)}, {"k1", extension_to_json(s.k1)}};
}

Json limit_to_json(const LimitClassification& c) {
  switch (c.kind) {
    case LimitClassification::Kind::Stable:
      return Json{{"kind", "stable"}, {"group", group_to_json(*c.stable)}};
    case LimitClassification::Kind::Zero:
      return Json{{"kind", "zero"}};
    case LimitClassification::Kind::NonFinitelyGenerated:
      return Json{{"kind", "not-finitely-generated"}, {"rational_rank", c.rational_rank}};
  }
  fail(ErrorKind::Invalid, "unreachable");
}

std::pair<Presentation, FgAbHom> limit_problem_from_json(const Json& j) {
  Presentation g = presentation_from_json(field(j, "group"));
  ZMatrix endo = matrix_from_json(field(j, "endo"));
  FgAbHom f = FgAbHom::endo(g, std::move(endo));
  return {std::move(g), std::move(f)};
}

Json snf_to_json(const SnfDecomposition& s, bool verbose) {
  Json out{{"d", matrix_to_json(s.d)}};
  if (verbose) {
    out["u"] = matrix_to_json(s.u);
    out["v"] = matrix_to_json(s.v);
  }
  return out;
}

std::string render_pair(const GradedKPair& p) {
  return "K0^gr = " + p.k0.text() + ", K1^gr = " + p.k1.text();
}

std::string render_pv(const PvSolution& s) {
  return "K0^gr = " + s.k0.text() + ", K1^gr = " + s.k1.text();
}

std::string render_snf(const SnfDecomposition& s, bool verbose) {
  std::ostringstream os;
  os << "D = diag(";
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (i) os << ", ";
    os << diag[i].get_str();
  }
  os << ")";
  if (verbose) os << "\nU = " << s.u.to_string() << "\nV = " << s.v.to_string();
  return os.str();
}

}  // namespace gkt
