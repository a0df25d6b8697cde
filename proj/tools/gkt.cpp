// Command-line front end for the gradedk library. Dispatches through the C
// API only: parse files, call, print, map status to an exit code.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gradedk.h"

namespace {

struct CtxGuard {
  gk_ctx* ctx = gk_ctx_new();
  ~CtxGuard() { gk_ctx_free(ctx); }
};

struct ResultGuard {
  char* s = nullptr;
  ~ResultGuard() { gk_string_free(s); }
};

std::string g_input_files;  // named in diagnostics

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  if (!g_input_files.empty()) g_input_files += ", ";
  g_input_files += path;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// 0 on success, 2 on input or validation errors, 3 on hypothesis violations.
int exit_code(gk_status s) {
  if (s == GK_OK) return 0;
  if (s == GK_ERR_HYPOTHESIS) return 3;
  return 2;
}

int finish(const CtxGuard& ctx, gk_status status, const ResultGuard& result) {
  if (status == GK_OK) {
    std::cout << result.s << "\n";
    return 0;
  }
  std::cerr << "error (" << gk_status_name(status) << ")";
  if (!g_input_files.empty()) std::cerr << " in " << g_input_files;
  std::cerr << ": " << gk_ctx_error(ctx.ctx) << "\n";
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded K-theory of graph C*-algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool json = false, force = false, verbose = false;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--force", force, "evaluate formulas outside their hypotheses");
  app.add_flag("--verbose", verbose, "include witnesses in the output");

  std::string graph_file, pair_file, problem_file, matrix_file, limit_file;
  std::string table_file, c1_file, c2_file, a_file, b_file, any_file;
  long odd = 0, even = 0, cl_n = 0, times = 1, kappa_l = -1;

  CLI::App* kgr = app.add_subcommand("kgr", "graded K-theory of a labelled graph");
  kgr->add_option("graph", graph_file, "graph JSON file")->required();

  CLI::App* ungraded = app.add_subcommand("ungraded", "classical K-theory (delta = 0)");
  ungraded->add_option("graph", graph_file, "graph JSON file")->required();

  CLI::App* cuntz = app.add_subcommand("cuntz", "bouquet of odd and even loops");
  cuntz->add_option("--odd", odd, "number of odd loops")->required();
  cuntz->add_option("--even", even, "number of even loops")->required();

  CLI::App* clifford = app.add_subcommand("clifford", "K^gr of the n-th Clifford algebra");
  clifford->add_option("n", cl_n, "Clifford index")->required();

  CLI::App* shift = app.add_subcommand("shift", "degree shift of a K-theory pair");
  shift->add_option("pair", pair_file, "pair JSON file")->required();
  shift->add_option("--times", times, "number of shifts (default 1)");

  CLI::App* pv = app.add_subcommand("pv", "graded Pimsner-Voiculescu solver");
  pv->add_option("problem", problem_file, "problem JSON file")->required();

  CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", matrix_file, "matrix JSON file")->required();

  CLI::App* limit = app.add_subcommand("limit", "stationary direct limit classification");
  limit->add_option("problem", limit_file, "limit JSON file")->required();

  CLI::App* cverify = app.add_subcommand("cocycle-verify", "2-cocycle identity check");
  cverify->add_option("table", table_file, "cocycle table JSON file");
  cverify->add_option("--kappa", kappa_l, "check the built-in kappa on Z_2^l");

  CLI::App* cobound = app.add_subcommand("coboundary", "search for a relating coboundary");
  cobound->add_option("c1", c1_file, "first table JSON file")->required();
  cobound->add_option("c2", c2_file, "second table JSON file")->required();

  CLI::App* product = app.add_subcommand("product", "cartesian product of P-graphs");
  product->add_option("a", a_file, "first presentation JSON file")->required();
  product->add_option("b", b_file, "second presentation JSON file")->required();

  CLI::App* decomp = app.add_subcommand("decompose", "structure decomposition of a table");
  decomp->add_option("table", table_file, "category table JSON file")->required();

  CLI::App* inner = app.add_subcommand("check-inner", "vertex potential test");
  inner->add_option("graph", graph_file, "graph JSON file")->required();

  CLI::App* validate = app.add_subcommand("validate", "validate a graph or skeleton file");
  validate->add_option("file", any_file, "JSON file")->required();

  CLI::App* gallery = app.add_subcommand("gallery", "run the worked-examples gallery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help exits clean; bad usage is an input error
  }

  unsigned opts = 0;
  if (json) opts |= GK_OPT_JSON;
  if (force) opts |= GK_OPT_FORCE;
  if (verbose) opts |= GK_OPT_VERBOSE;

  CtxGuard ctx;
  ResultGuard result;
  gk_status status = GK_ERR_INTERNAL;

  if (kgr->parsed()) {
    status = gk_kgr_graph(ctx.ctx, read_file(graph_file).c_str(), opts, &result.s);
  } else if (ungraded->parsed()) {
    status = gk_ungraded_k(ctx.ctx, read_file(graph_file).c_str(), opts, &result.s);
  } else if (cuntz->parsed()) {
    status = gk_cuntz(ctx.ctx, odd, even, opts, &result.s);
  } else if (clifford->parsed()) {
    status = gk_clifford(ctx.ctx, cl_n, opts, &result.s);
  } else if (shift->parsed()) {
    status = gk_shift_cl1(ctx.ctx, read_file(pair_file).c_str(), times, opts, &result.s);
  } else if (pv->parsed()) {
    status = gk_pv_solve(ctx.ctx, read_file(problem_file).c_str(), opts, &result.s);
  } else if (snf->parsed()) {
    status = gk_snf(ctx.ctx, read_file(matrix_file).c_str(), opts, &result.s);
  } else if (limit->parsed()) {
    status = gk_stationary_limit(ctx.ctx, read_file(limit_file).c_str(), opts, &result.s);
  } else if (cverify->parsed()) {
    if (!table_file.empty()) {
      status = gk_verify_cocycle_table(ctx.ctx, read_file(table_file).c_str(), opts,
                                       &result.s);
    } else if (kappa_l >= 0) {
      status = gk_verify_kappa(ctx.ctx, kappa_l, opts, &result.s);
    } else {
      std::cerr << "error: cocycle-verify needs a table file or --kappa L\n";
      return 2;
    }
  } else if (cobound->parsed()) {
    status = gk_find_coboundary(ctx.ctx, read_file(c1_file).c_str(),
                                read_file(c2_file).c_str(), opts, &result.s);
  } else if (product->parsed()) {
    status = gk_graph_product(ctx.ctx, read_file(a_file).c_str(),
                              read_file(b_file).c_str(), opts, &result.s);
  } else if (decomp->parsed()) {
    status = gk_decompose(ctx.ctx, read_file(table_file).c_str(), opts, &result.s);
  } else if (inner->parsed()) {
    status = gk_check_inner(ctx.ctx, read_file(graph_file).c_str(), opts, &result.s);
  } else if (validate->parsed()) {
    status = gk_validate(ctx.ctx, read_file(any_file).c_str(), opts, &result.s);
  } else if (gallery->parsed()) {
    int failures = 0;
    status = gk_gallery(ctx.ctx, opts, &failures, &result.s);
    if (status == GK_OK) {
      std::cout << result.s << "\n";
      return failures == 0 ? 0 : 1;
    }
  }

  return finish(ctx, status, result);
}
