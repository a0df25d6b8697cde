// Acceptance suite: one line per criterion, exact checks throughout.
// Exits with the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gallery.hpp"
#include "gradedk.hpp"

using namespace gkt;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string note;
  try {
    pass = body();
  } catch (const std::exception& e) {
    note = std::string(" [exception: ") + e.what() + "]";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("ACCEPTANCE %2d %s %s (%lld ms)%s\n", number, pass ? "PASS" : "FAIL",
              name.c_str(), static_cast<long long>(ms), note.c_str());
  if (!pass) ++g_failures;
}

std::pair<OneGraph, DeltaLabeling> bouquet(std::size_t n, std::size_t odd) {
  std::vector<OneGraphEdge> edges;
  DeltaLabeling delta;
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = "e" + std::to_string(i + 1);
    edges.push_back({id, "v", "v"});
    delta.values[id] = i < odd ? 1 : 0;
  }
  return {OneGraph({"v"}, std::move(edges)), std::move(delta)};
}

std::pair<OneGraph, DeltaLabeling> fib_truncation(std::size_t n) {
  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<OneGraphEdge> edges;
  DeltaLabeling delta;
  for (std::size_t i = 1; i < n; ++i) {
    std::string e = "e" + std::to_string(i), f = "f" + std::to_string(i);
    edges.push_back({e, "v" + std::to_string(i + 1), "v" + std::to_string(i)});
    edges.push_back({f, "v" + std::to_string(i + 1), "v" + std::to_string(i)});
    delta.values[e] = 0;
    delta.values[f] = 1;
  }
  return {OneGraph(std::move(vertices), std::move(edges)), std::move(delta)};
}

// --- independent cardinality oracle (Cramer + breadth-first search) --------

long long det_small(const std::vector<std::vector<long long>>& a) {
  std::size_t n = a.size();
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

bool in_lattice_cramer(const std::vector<std::vector<long long>>& r, long long det,
                       const std::vector<long long>& x) {
  std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto sub = r;
    for (std::size_t row = 0; row < n; ++row) sub[row][i] = x[row];
    if (det_small(sub) % det != 0) return false;
  }
  return true;
}

long long bfs_coset_count(const std::vector<std::vector<long long>>& r) {
  std::size_t n = r.size();
  long long det = det_small(r);
  std::vector<std::vector<long long>> reps{std::vector<long long>(n, 0)};
  std::vector<std::vector<long long>> frontier = reps;
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& v : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        for (long long step : {-1, 1}) {
          auto w = v;
          w[i] += step;
          bool known = false;
          for (const auto& rep : reps) {
            std::vector<long long> diff(n);
            for (std::size_t t = 0; t < n; ++t) diff[t] = w[t] - rep[t];
            if (in_lattice_cramer(r, det, diff)) {
              known = true;
              break;
            }
          }
          if (!known) {
            reps.push_back(w);
            next.push_back(w);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return static_cast<long long>(reps.size());
}

// ---------------------------------------------------------------------------

FgAbGroup zmod(long n) { return FgAbGroup::cyclic(n); }
FgAbGroup zfree(std::size_t r) { return FgAbGroup::free_of_rank(r); }

}  // namespace

int main() {
  criterion(1, "twisted K_2 gives exactly (Z/5, 0)", [] {
    OneGraph g({"v1", "v2"}, {{"e11", "v1", "v1"},
                              {"e12", "v2", "v1"},
                              {"e21", "v1", "v2"},
                              {"e22", "v2", "v2"}});
    DeltaLabeling d;
    d.values = {{"e11", 1}, {"e12", 1}, {"e21", 0}, {"e22", 1}};
    if (!(signed_adjacency(g, d) == ZMatrix::from_rows({{-1, -1}, {1, -1}}))) return false;
    return kgr_graph(g, d).pair == GradedKPair{zmod(5), {}};
  });

  criterion(2, "Cuntz family closed form vs matrix formula (n <= 6)", [] {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t p = 0; p <= n; ++p) {
        auto [g, d] = bouquet(n, p);
        if (!(kgr_graph(g, d).pair == cuntz_kgr(p, n - p))) return false;
      }
      if (n >= 2 &&
          !(cuntz_kgr(0, n) == GradedKPair{zmod(static_cast<long>(n - 1)), {}}))
        return false;
    }
    return true;
  });

  criterion(3, "Clifford periodicity (n <= 8) with iterated shifts", [] {
    GradedKPair p = clifford_kgr(0);
    for (std::size_t n = 0; n <= 8; ++n) {
      GradedKPair expect =
          (n % 2 == 0) ? GradedKPair{zfree(1), {}} : GradedKPair{{}, zfree(1)};
      if (!(clifford_kgr(n) == expect)) return false;
      if (!(p == expect)) return false;
      p = shift_cl1(p);
    }
    return true;
  });

  criterion(4, "graded PV on (Z^2, 0): (Z^2, Z^2) at k=0 and (Z/2^2, 0) at k=1", [] {
    PvSolution s0 = pv_solve(pv_problem_from_pair({zfree(2), {}}, 0));
    PvSolution s1 = pv_solve(pv_problem_from_pair({zfree(2), {}}, 1));
    return s0.k0.resolved && *s0.k0.resolved == zfree(2) && s0.k1.resolved &&
           *s0.k1.resolved == zfree(2) && s1.k0.resolved &&
           *s1.k0.resolved == FgAbGroup{0, {2, 2}} && s1.k1.resolved &&
           s1.k1.resolved->is_trivial();
  });

  criterion(5, "twisted T_2: chain (Z/2, 0) through PV at k=1 to (Z/2, Z/2)", [] {
    auto [t1, d1] = bouquet(1, 1);
    GradedKPair base = kgr_graph(t1, d1).pair;
    if (!(base == GradedKPair{zmod(2), {}})) return false;
    PvSolution s = pv_solve(pv_problem_from_pair(base, 1));
    return s.k0.resolved && *s.k0.resolved == zmod(2) && s.k1.resolved &&
           *s.k1.resolved == zmod(2);
  });

  criterion(6, "doubled-edge telescope: zero matrix, (0,0) forced, limit Zero", [] {
    for (std::size_t n = 2; n <= 10; ++n) {
      auto [g, d] = fib_truncation(n);
      if (!signed_adjacency(g, d).is_zero()) return false;
      GradedKResult r = kgr_graph(g, d, /*force=*/true);
      if (!r.outside_hypotheses) return false;
      if (!(r.pair == GradedKPair{})) return false;
    }
    Presentation z = Presentation::free_group(1);
    return stationary_limit_kgr(z, FgAbHom::endo(z, ZMatrix(1, 1))).kind ==
           LimitClassification::Kind::Zero;
  });

  criterion(7, "SNF property suite: 500 random matrices + coset-count oracle", [] {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::uniform_int_distribution<int> entry(-30, 30);
    for (int trial = 0; trial < 500; ++trial) {
      ZMatrix m(dim(rng), dim(rng));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
      SnfDecomposition s = snf(m);
      if (!(s.u * m * s.v == s.d)) return false;
      if (abs(s.u.determinant()) != 1 || abs(s.v.determinant()) != 1) return false;
      auto diag = s.diagonal();
      bool seen_zero = false;
      for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] < 0) return false;
        if (diag[i] == 0) seen_zero = true;
        else if (seen_zero) return false;
        if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] != 0 &&
            diag[i + 1] % diag[i] != 0)
          return false;
      }
    }
    // cokernel order vs breadth-first coset enumeration
    std::uniform_int_distribution<std::size_t> small_dim(1, 3);
    std::uniform_int_distribution<long long> small_entry(-5, 5);
    int done = 0;
    while (done < 30) {
      std::size_t n = small_dim(rng);
      std::vector<std::vector<long long>> r(n, std::vector<long long>(n));
      for (auto& row : r)
        for (auto& x : row) x = small_entry(rng);
      long long det = det_small(r);
      if (det == 0 || det > 200 || det < -200) continue;
      ++done;
      ZMatrix rel(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rel.at(i, j) = static_cast<long>(r[i][j]);
      FgAbGroup g = normal_form({n, rel});
      if (!g.is_finite()) return false;
      if (g.order() != Int(static_cast<long>(bfs_coset_count(r)))) return false;
    }
    return true;
  });

  criterion(8, "cocycle suite: kappa identity, bicharacter table, coboundaries", [] {
    for (std::size_t l = 0; l <= 3; ++l)
      if (!verify_cocycle(CocycleTable::kappa_table(l)).ok) return false;
    CocycleTable k3 = CocycleTable::kappa_table(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        int chi = bicharacter(k3, Bits::unit(3, i), Bits::unit(3, j));
        if (chi != (i == j ? 1 : -1)) return false;
      }
    for (const auto& im : std::vector<std::vector<std::size_t>>{
             {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}) {
      CocycleTable twisted = permute_kappa(k3, Permutation::from_images(im));
      auto b = find_coboundary(k3, twisted);
      if (!b) return false;
      for (std::size_t mi = 0; mi < 8; ++mi)
        for (std::size_t ni = 0; ni < 8; ++ni) {
          Bits m = Bits::from_index(3, mi), n = Bits::from_index(3, ni);
          int delta = b->sign_at(m) * b->sign_at(m + n) * b->sign_at(n);
          if (twisted.sign(m, n) != k3.sign(m, n) * delta) return false;
        }
    }
    return true;
  });

  criterion(9, "product sign identity over all degree splits of total <= 6", [] {
    for (std::size_t k = 0; k <= 6; ++k)
      for (std::size_t a = 0; k + a <= 6; ++a)
        for (std::size_t l = 0; k + a + l <= 6; ++l)
          for (std::size_t b = 0; k + a + l + b <= 6; ++b)
            if (!product_sign_identity(k, a, l, b)) return false;
    return true;
  });

  criterion(10, "inner gradings from potentials leave K-theory unchanged (50x)", [] {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::size_t> nv_dist(2, 8);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t nv = nv_dist(rng);
      std::vector<std::string> vertices;
      for (std::size_t i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
      std::vector<OneGraphEdge> edges;
      std::uniform_int_distribution<std::size_t> vpick(0, nv - 1);
      std::size_t id = 0;
      for (std::size_t i = 0; i < nv; ++i)
        edges.push_back(
            {"c" + std::to_string(id++), vertices[i], vertices[(i + 1) % nv]});
      std::uniform_int_distribution<std::size_t> extra_dist(0, 2 * nv);
      for (std::size_t i = extra_dist(rng); i > 0; --i)
        edges.push_back(
            {"x" + std::to_string(id++), vertices[vpick(rng)], vertices[vpick(rng)]});
      OneGraph g(vertices, edges);
      std::map<std::string, uint8_t> pot;
      for (const std::string& v : vertices) pot[v] = static_cast<uint8_t>(coin(rng));
      DeltaLabeling d;
      for (const OneGraphEdge& e : g.edges())
        d.values[e.id] = pot[e.range] ^ pot[e.source];
      auto eps = inner_potential(g, d);
      if (!eps) return false;
      for (const OneGraphEdge& e : g.edges())
        if (((*eps).at(e.range) ^ (*eps).at(e.source)) != d.at(e.id)) return false;
      if (!(kgr_graph(g, d).pair == ungraded_k(g).pair)) return false;
    }
    return true;
  });

  criterion(11, "structure round trip: decompose after crossed product (20x)", [] {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::size_t> nv_dist(2, 6);
    std::uniform_int_distribution<std::size_t> seed_dist(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t l = (trial % 2) + 1;
      std::size_t nv = nv_dist(rng);
      std::vector<std::string> vertices;
      for (std::size_t i = 0; i < nv; ++i) vertices.push_back("w" + std::to_string(i));

      std::vector<std::vector<std::size_t>> vperm(l, std::vector<std::size_t>(nv));
      for (std::size_t gi = 0; gi < l; ++gi)
        for (std::size_t i = 0; i < nv; ++i) vperm[gi][i] = i;
      std::uniform_int_distribution<std::size_t> vpick(0, nv - 1);
      for (std::size_t gi = 0; gi < l; ++gi) {
        std::size_t a = vpick(rng), b = vpick(rng);
        if (a != b) std::swap(vperm[gi][a], vperm[gi][b]);
      }
      if (l == 2) {
        bool commute = true;
        for (std::size_t i = 0; i < nv; ++i)
          if (vperm[0][vperm[1][i]] != vperm[1][vperm[0][i]]) commute = false;
        if (!commute)
          for (std::size_t i = 0; i < nv; ++i) vperm[1][i] = i;
      }

      std::size_t ng = std::size_t{1} << l;
      auto act_vertex = [&](std::size_t g, std::size_t v) {
        for (std::size_t gi = 0; gi < l; ++gi)
          if ((g >> gi) & 1) v = vperm[gi][v];
        return v;
      };
      std::vector<ColoredEdge> edges;
      std::vector<std::map<std::string, std::string>> edge_maps(l);
      for (std::size_t sd = seed_dist(rng); sd > 0; --sd) {
        std::size_t s = vpick(rng), r = vpick(rng);
        std::vector<std::string> ids(ng);
        for (std::size_t g = 0; g < ng; ++g) {
          ids[g] = "x" + std::to_string(sd) + "_" + std::to_string(g);
          edges.push_back(
              {ids[g], vertices[act_vertex(g, s)], vertices[act_vertex(g, r)]});
        }
        for (std::size_t gi = 0; gi < l; ++gi)
          for (std::size_t g = 0; g < ng; ++g)
            edge_maps[gi][ids[g]] = ids[g ^ (std::size_t{1} << gi)];
      }

      KGraphSkeleton gamma(1, vertices, {edges}, {});
      FiniteAbelianAction rho;
      rho.l = l;
      for (std::size_t gi = 0; gi < l; ++gi) {
        GeneratorAction g;
        for (std::size_t i = 0; i < nv; ++i)
          g.vertex_map[vertices[i]] = vertices[vperm[gi][i]];
        g.edge_map = edge_maps[gi];
        rho.generators.push_back(std::move(g));
      }

      PGraphPresentation p = crossed_product(gamma, rho);
      Decomposition d = decompose(enumerate_fragment(p, {1}));
      if (!(d.skeleton.vertices() == vertices)) return false;
      if (d.skeleton.edge_count() != edges.size()) return false;
      for (std::size_t gi = 0; gi < l; ++gi)
        for (std::size_t i = 0; i < nv; ++i)
          if (d.action.generators[gi].vertex_map.at(vertices[i]) !=
              vertices[vperm[gi][i]])
            return false;
      std::string zeros(l, '0');
      for (const ColoredEdge& e : edges) {
        std::string fid = "(" + e.range + ":" + e.id + "|" + zeros + ")";
        const ColoredEdge& back = d.skeleton.edge(fid);
        if (back.range != e.range || back.source != e.source) return false;
        for (std::size_t gi = 0; gi < l; ++gi) {
          std::string expect = "(" + rho.generators[gi].vertex_map.at(e.range) + ":" +
                               edge_maps[gi].at(e.id) + "|" + zeros + ")";
          if (d.action.generators[gi].edge_map.at(fid) != expect) return false;
        }
      }
    }

    // Omega_{Z_2} decomposes to the translation action.
    KGraphSkeleton two_points(0, {"p0", "p1"}, {}, {});
    FiniteAbelianAction tau;
    tau.l = 1;
    GeneratorAction g;
    g.vertex_map = {{"p0", "p1"}, {"p1", "p0"}};
    tau.generators.push_back(g);
    Decomposition d = decompose(enumerate_fragment(crossed_product(two_points, tau), {}));
    return d.action.generators[0].vertex_map.at("p0") == "p1" &&
           d.action.generators[0].vertex_map.at("p1") == "p0";
  });

  if (g_failures == 0)
    std::printf("ACCEPTANCE SUITE: all criteria pass\n");
  else
    std::printf("ACCEPTANCE SUITE: %d criterion(s) fail\n", g_failures);
  return g_failures;
}
