#include "gradedk.hpp"

#include <deque>

namespace gkt {

std::string GradedKPair::text() const { return "(" + k0.text() + ", " + k1.text() + ")"; }

ZMatrix signed_adjacency(const OneGraph& e, const DeltaLabeling& delta) {
  delta.require_total(e);
  std::size_t n = e.vertices().size();
  ZMatrix a(n, n);
  for (const OneGraphEdge& ed : e.edges()) {
    std::size_t v = e.vertex_index(ed.range);
    std::size_t w = e.vertex_index(ed.source);
    a.at(v, w) += delta.at(ed.id) ? -1 : 1;
  }
  return a;
}

GradedKResult kgr_graph(const OneGraph& e, const DeltaLabeling& delta, bool force) {
  if (e.empty()) fail(ErrorKind::EmptyGraph, "the graph has no vertices");
  GraphChecks checks = graph_checks(e);
  bool violated = !checks.no_sources || !checks.no_sinks;
  if (violated && !force) {
    std::string what = "the formula requires no sources or sinks; the graph has";
    if (!checks.no_sources) what += " sources";
    if (!checks.no_sources && !checks.no_sinks) what += " and";
    if (!checks.no_sinks) what += " sinks";
    fail(ErrorKind::HypothesisViolated, what + " (use force to compute anyway)");
  }

  std::size_t n = e.vertices().size();
  ZMatrix m = ZMatrix::identity(n) - signed_adjacency(e, delta).transpose();

  GradedKResult out;
  out.outside_hypotheses = violated;
  out.pair.k0 = normal_form(Presentation(n, m));
  out.pair.k1 = FgAbGroup::free_of_rank(n - rank(m));  // subgroup of Z E^0
  return out;
}

GradedKResult ungraded_k(const OneGraph& e, bool force) {
  return kgr_graph(e, DeltaLabeling::zero(e), force);
}

GradedKPair cuntz_kgr(std::size_t odd_p, std::size_t even_q) {
  if (odd_p + even_q == 0) fail(ErrorKind::EmptyGraph, "a bouquet needs at least one loop");
  long long v = 1 + static_cast<long long>(odd_p) - static_cast<long long>(even_q);
  if (v == 0) return {FgAbGroup::free_of_rank(1), FgAbGroup::free_of_rank(1)};
  return {FgAbGroup::cyclic(static_cast<long>(v < 0 ? -v : v)), FgAbGroup::trivial()};
}

GradedKPair clifford_kgr(std::size_t n) {
  if (n % 2 == 0) return {FgAbGroup::free_of_rank(1), FgAbGroup::trivial()};
  return {FgAbGroup::trivial(), FgAbGroup::free_of_rank(1)};
}

GradedKPair shift_cl1(const GradedKPair& p) { return {p.k1, p.k0}; }

GradedKPair crossed_z2_kgr(const GradedKPair& p) { return shift_cl1(p); }

namespace {

FgAbHom pv_middle_map(const Presentation& g, const ZMatrix& alpha, const ZMatrix& gamma,
                      int k) {
  std::size_t n = g.generators;
  if (alpha.rows() != n || alpha.cols() != n || gamma.rows() != n || gamma.cols() != n)
    fail(ErrorKind::IllFormedHom, "endomorphism lifts must be square of the generator count");
  ZMatrix composite = (k % 2 == 0) ? gamma : alpha * gamma;
  ZMatrix f = ZMatrix::identity(n);
  f = (k % 2 == 0) ? f - composite : f + composite;
  return FgAbHom::endo(g, f);  // verifies well-definedness
}

}  // namespace

PvSolution pv_solve(const PvProblem& p) {
  FgAbHom f0 = pv_middle_map(p.g0, p.alpha0, p.gamma0, p.k);
  FgAbHom f1 = pv_middle_map(p.g1, p.alpha1, p.gamma1, p.k);
  PvSolution out;
  out.k0 = resolve_extension(coker(f0), ker(f1));
  out.k1 = resolve_extension(coker(f1), ker(f0));
  return out;
}

PvProblem pv_problem_from_pair(const GradedKPair& pair, int k) {
  PvProblem p;
  p.g0 = presentation_of(pair.k0);
  p.g1 = presentation_of(pair.k1);
  p.alpha0 = ZMatrix::identity(p.g0.generators);
  p.alpha1 = ZMatrix::identity(p.g1.generators);
  p.gamma0 = ZMatrix::identity(p.g0.generators);
  p.gamma1 = ZMatrix::identity(p.g1.generators);
  p.k = k;
  return p;
}

std::optional<std::map<std::string, uint8_t>> inner_potential(const OneGraph& e,
                                                              const DeltaLabeling& delta) {
  delta.require_total(e);
  std::size_t n = e.vertices().size();
  std::vector<int> eps(n, -1);  // -1 = unassigned

  // adjacency over the underlying undirected graph, by input edge order
  std::vector<std::vector<std::pair<std::size_t, uint8_t>>> nbrs(n);
  for (const OneGraphEdge& ed : e.edges()) {
    std::size_t r = e.vertex_index(ed.range);
    std::size_t s = e.vertex_index(ed.source);
    uint8_t d = delta.at(ed.id);
    nbrs[r].emplace_back(s, d);
    nbrs[s].emplace_back(r, d);
  }

  for (std::size_t start = 0; start < n; ++start) {
    if (eps[start] != -1) continue;
    eps[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& [w, d] : nbrs[v]) {
        int want = eps[v] ^ d;
        if (eps[w] == -1) {
          eps[w] = want;
          queue.push_back(w);
        } else if (eps[w] != want) {
          return std::nullopt;
        }
      }
    }
  }

  std::map<std::string, uint8_t> out;
  for (std::size_t i = 0; i < n; ++i) out[e.vertices()[i]] = static_cast<uint8_t>(eps[i]);
  return out;
}

LimitClassification stationary_limit_kgr(const Presentation& g, const FgAbHom& f) {
  return direct_limit_stationary(g, f);
}

}  // namespace gkt
