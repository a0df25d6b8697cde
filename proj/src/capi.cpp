#include "gradedk.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "gallery.hpp"
#include "json_io.hpp"

struct gk_ctx {
  std::string last_error;
};

namespace {

using namespace gkt;

gk_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
      return GK_ERR_PARSE;
    case ErrorKind::HypothesisViolated:
      return GK_ERR_HYPOTHESIS;
    case ErrorKind::SearchSpaceTooLarge:
      return GK_ERR_UNSUPPORTED;
    default:
      return GK_ERR_INVALID;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
gk_status run(gk_ctx* ctx, char** out, F&& body) {
  if (!ctx || !out) return GK_ERR_INTERNAL;
  ctx->last_error.clear();
  try {
    std::string result = body();
    *out = dup_string(result);
    return GK_OK;
  } catch (const Error& e) {
    ctx->last_error = std::string(error_kind_name(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return GK_ERR_INTERNAL;
  }
}

bool want_json(unsigned opts) { return opts & GK_OPT_JSON; }

std::string emit(const Json& j) { return j.dump(); }

std::string pair_output(const GradedKResult& r, unsigned opts) {
  if (want_json(opts)) {
    Json j = pair_to_json(r.pair);
    if (r.outside_hypotheses) j["outside_hypotheses"] = true;
    return emit(j);
  }
  std::string text = render_pair(r.pair);
  if (r.outside_hypotheses) text += "\nnote: formula applied outside stated hypotheses";
  return text;
}

std::string check_output(const CocycleCheck& c, unsigned opts) {
  if (want_json(opts)) {
    Json j{{"ok", c.ok}};
    if (!c.ok) j["counterexample"] = c.counterexample;
    return emit(j);
  }
  return c.ok ? "cocycle identity holds" : "cocycle identity fails: " + c.counterexample;
}

}  // namespace

extern "C" {

gk_ctx* gk_ctx_new(void) { return new gk_ctx(); }

void gk_ctx_free(gk_ctx* ctx) { delete ctx; }

const char* gk_ctx_error(const gk_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* gk_status_name(gk_status s) {
  switch (s) {
    case GK_OK: return "ok";
    case GK_ERR_PARSE: return "parse error";
    case GK_ERR_INVALID: return "invalid input";
    case GK_ERR_HYPOTHESIS: return "hypothesis violated";
    case GK_ERR_UNSUPPORTED: return "unsupported request";
    case GK_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* gk_version(void) { return "0.1.0"; }

void gk_string_free(char* s) { std::free(s); }

gk_status gk_kgr_graph(gk_ctx* ctx, const char* graph_json, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    auto [graph, delta] = graph_from_json(parse_json(graph_json));
    return pair_output(kgr_graph(graph, delta, opts & GK_OPT_FORCE), opts);
  });
}

gk_status gk_ungraded_k(gk_ctx* ctx, const char* graph_json, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    auto [graph, delta] = graph_from_json(parse_json(graph_json));
    return pair_output(ungraded_k(graph, opts & GK_OPT_FORCE), opts);
  });
}

gk_status gk_cuntz(gk_ctx* ctx, long odd, long even, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    if (odd < 0 || even < 0)
      fail(ErrorKind::Parse, "loop counts must be nonnegative");
    GradedKResult r{cuntz_kgr(static_cast<std::size_t>(odd), static_cast<std::size_t>(even)),
                    false};
    return pair_output(r, opts);
  });
}

gk_status gk_clifford(gk_ctx* ctx, long n, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    if (n < 0) fail(ErrorKind::Parse, "n must be nonnegative");
    return pair_output({clifford_kgr(static_cast<std::size_t>(n)), false}, opts);
  });
}

gk_status gk_shift_cl1(gk_ctx* ctx, const char* pair_json, long times, unsigned opts,
                       char** out) {
  return run(ctx, out, [&] {
    if (times < 0) fail(ErrorKind::Parse, "shift count must be nonnegative");
    GradedKPair p = pair_from_json(parse_json(pair_json));
    if (times % 2 == 1) p = shift_cl1(p);
    return pair_output({p, false}, opts);
  });
}

gk_status gk_crossed_z2(gk_ctx* ctx, const char* pair_json, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    GradedKPair p = crossed_z2_kgr(pair_from_json(parse_json(pair_json)));
    return pair_output({p, false}, opts);
  });
}

gk_status gk_pv_solve(gk_ctx* ctx, const char* problem_json, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    PvSolution s = pv_solve(pv_problem_from_json(parse_json(problem_json)));
    return want_json(opts) ? emit(pv_solution_to_json(s)) : render_pv(s);
  });
}

gk_status gk_snf(gk_ctx* ctx, const char* matrix_json, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    SnfDecomposition s = snf(matrix_from_json(parse_json(matrix_json)));
    return want_json(opts) ? emit(snf_to_json(s, opts & GK_OPT_VERBOSE))
                           : render_snf(s, opts & GK_OPT_VERBOSE);
  });
}

gk_status gk_stationary_limit(gk_ctx* ctx, const char* limit_json, unsigned opts,
                              char** out) {
  return run(ctx, out, [&] {
    auto [group, endo] = limit_problem_from_json(parse_json(limit_json));
    LimitClassification c = stationary_limit_kgr(group, endo);
    return want_json(opts) ? emit(limit_to_json(c)) : c.text();
  });
}

gk_status gk_verify_kappa(gk_ctx* ctx, long l, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    if (l < 0 || l > 6)
      fail(ErrorKind::SearchSpaceTooLarge, "exhaustive check supports 0 <= l <= 6");
    return check_output(verify_cocycle(CocycleTable::kappa_table(static_cast<std::size_t>(l))),
                        opts);
  });
}

gk_status gk_verify_cocycle_table(gk_ctx* ctx, const char* table_json, unsigned opts,
                                  char** out) {
  return run(ctx, out, [&] {
    return check_output(verify_cocycle(cocycle_table_from_json(parse_json(table_json))),
                        opts);
  });
}

gk_status gk_find_coboundary(gk_ctx* ctx, const char* c1_json, const char* c2_json,
                             unsigned opts, char** out) {
  return run(ctx, out, [&] {
    CocycleTable c1 = cocycle_table_from_json(parse_json(c1_json));
    CocycleTable c2 = cocycle_table_from_json(parse_json(c2_json));
    auto b = find_coboundary(c1, c2);
    if (want_json(opts)) {
      Json j{{"found", b.has_value()}};
      if (b) j["coboundary"] = coboundary_to_json(*b);
      return emit(j);
    }
    if (!b) return std::string("no coboundary relates the tables");
    std::ostringstream os;
    os << "b =";
    for (std::size_t i = 0; i < b->b.size(); ++i)
      os << " " << Bits::from_index(b->l, i).to_string() << ":"
         << (b->b[i] ? "-1" : "+1");
    return os.str();
  });
}

gk_status gk_graph_product(gk_ctx* ctx, const char* a_json, const char* b_json,
                           unsigned opts, char** out) {
  return run(ctx, out, [&] {
    PGraphPresentation a = pgraph_from_json(parse_json(a_json));
    PGraphPresentation b = pgraph_from_json(parse_json(b_json));
    Json j = pgraph_to_json(cartesian_product(a, b));
    return want_json(opts) ? emit(j) : j.dump(2);
  });
}

gk_status gk_decompose(gk_ctx* ctx, const char* table_json, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    Decomposition d = decompose(table_from_json(parse_json(table_json)));
    Json j{{"skeleton", skeleton_to_json(d.skeleton)}, {"action", action_to_json(d.action)}};
    return want_json(opts) ? emit(j) : j.dump(2);
  });
}

gk_status gk_check_inner(gk_ctx* ctx, const char* graph_json, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    auto [graph, delta] = graph_from_json(parse_json(graph_json));
    auto eps = inner_potential(graph, delta);
    if (want_json(opts)) {
      Json j{{"inner", eps.has_value()}};
      if (eps) {
        Json e = Json::object();
        for (const auto& [v, x] : *eps) e[v] = int(x);
        j["epsilon"] = std::move(e);
      }
      return emit(j);
    }
    if (!eps) return std::string("not inner: no vertex potential exists");
    std::ostringstream os;
    os << "inner: epsilon =";
    for (const std::string& v : graph.vertices()) os << " " << v << ":" << int((*eps).at(v));
    return os.str();
  });
}

gk_status gk_validate(gk_ctx* ctx, const char* json_text, unsigned opts, char** out) {
  return run(ctx, out, [&] {
    Json j = parse_json(json_text);
    SkeletonDiagnostics diag;
    std::string what;
    if (j.contains("skeleton")) {
      what = "P-graph presentation";
      KGraphSkeleton s = skeleton_from_json(j.at("skeleton"));
      diag = validate_skeleton(s);
      if (diag.ok && j.contains("action")) {
        try {
          validate_action(s, action_from_json(j.at("action")));
        } catch (const Error& e) {
          diag.ok = false;
          diag.problems.push_back(e.what());
        }
      }
    } else if (j.contains("k")) {
      what = "skeleton";
      diag = validate_skeleton(skeleton_from_json(j));
    } else {
      what = "graph";
      auto [graph, delta] = graph_from_json(j);
      GraphChecks c = graph_checks(graph);
      if (want_json(opts))
        return emit(Json{{"row_finite", c.row_finite},
                         {"no_sources", c.no_sources},
                         {"no_sinks", c.no_sinks}});
      std::ostringstream os;
      os << "row_finite: " << (c.row_finite ? "yes" : "no")
         << ", no_sources: " << (c.no_sources ? "yes" : "no")
         << ", no_sinks: " << (c.no_sinks ? "yes" : "no");
      return os.str();
    }
    if (want_json(opts)) return emit(Json{{"ok", diag.ok}, {"problems", diag.problems}});
    if (diag.ok) return what + " is valid";
    std::string text = what + " is invalid:";
    for (const std::string& p : diag.problems) text += "\n  " + p;
    return text;
  });
}

gk_status gk_gallery(gk_ctx* ctx, unsigned opts, int* failures, char** out) {
  return run(ctx, out, [&] {
    std::vector<GalleryEntry> entries = run_gallery();
    int failed = 0;
    for (const GalleryEntry& e : entries)
      if (!e.pass) ++failed;
    if (failures) *failures = failed;
    if (want_json(opts)) {
      Json j = Json::array();
      for (const GalleryEntry& e : entries)
        j.push_back(Json{{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
      return emit(j);
    }
    std::ostringstream os;
    for (const GalleryEntry& e : entries) {
      os << (e.pass ? "PASS" : "FAIL") << " " << e.name;
      if (!e.pass && !e.detail.empty()) os << " -- " << e.detail;
      os << "\n";
    }
    os << (failed == 0 ? "all examples pass" : std::to_string(failed) + " example(s) fail");
    return os.str();
  });
}

}  // extern "C"
