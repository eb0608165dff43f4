// Command-line front end. Talks to the solver only through trihole.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "trihole.h"

namespace {

struct InstanceDeleter {
  void operator()(th_instance* p) const { th_instance_free(p); }
};
struct ResultDeleter {
  void operator()(th_result* p) const { th_result_free(p); }
};
using InstancePtr = std::unique_ptr<th_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<th_result, ResultDeleter>;

// Takes ownership of a C string from the library.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  th_string_free(s);
  return out;
}

int report_error(th_status s) {
  std::cerr << "error: " << th_last_error() << "\n";
  return static_cast<int>(s);
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

InstancePtr load(const std::string& path, th_status* status) {
  th_instance* raw = nullptr;
  *status = th_instance_read(path.c_str(), &raw);
  return InstancePtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer multiflows on planar graphs with demands on three holes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(th_version()));

  std::string input, output = "-", solution;
  th_check_options copt;
  th_check_options_default(&copt);
  bool skip_metric = false, trace = false;
  int size_bound = 0;

  auto* validate = app.add_subcommand("validate", "parse, validate and print the canonical form");
  validate->add_option("instance", input, "instance file")->required();

  auto* check = app.add_subcommand("check", "print the cut and metric excess terms");
  check->add_option("instance", input, "instance file")->required();
  check->add_flag("--skip-metric", skip_metric, "cut terms only");
  check->add_option("--max-quad", copt.max_quad, "cap on hole boundary length for the metric term");
  check->add_option("--threads", copt.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "decide solvability and build an integer multiflow");
  solve->add_option("instance", input, "instance file")->required();
  solve->add_option("-o,--out", output, "solution file, - for stdout");
  solve->add_flag("--trace", trace, "dump the reduction trace to stderr");
  solve->add_option("--max-quad", copt.max_quad, "cap on hole boundary length for the metric term");
  solve->add_option("--threads", copt.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "re-check a solution file against an instance");
  verify->add_option("instance", input, "instance file")->required();
  verify->add_option("solution", solution, "solution file")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth verdict (small instances)");
  oracle->add_option("instance", input, "instance file")->required();
  oracle->add_option("--size-bound", size_bound, "vertex bound for both enumerations")
      ->check(CLI::PositiveNumber);

  th_gen_params gp;
  th_gen_params_default(&gp);
  std::string target = "any";
  auto* gen = app.add_subcommand("gen", "write a random Eulerian instance");
  gen->add_option("--seed", gp.seed, "random seed");
  gen->add_option("-n,--vertices", gp.n, "vertex count");
  gen->add_option("--outer-size", gp.outer_size, "outer hole boundary length");
  gen->add_option("--hole-max", gp.hole_max, "preferred max boundary length of bounded holes");
  gen->add_option("--demands", gp.demands, "demand pairs drawn");
  gen->add_option("--cmax", gp.cmax, "max capacity for unrouted targets");
  gen->add_option("--dmax", gp.dmax, "max demand per pair");
  gen->add_option("--chords", gp.chords, "extra chords, -1 for n/2");
  gen->add_option("--target", target, "any | solvable | cut-tight | metric-violating");
  gen->add_option("--retries", gp.retries, "attempt budget for oracle-checked targets");
  gen->add_option("-o,--out", output, "instance file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(TH_INVALID_INPUT);
  }
  copt.skip_metric = skip_metric ? 1 : 0;

  th_status st = TH_OK;

  if (*gen) {
    gp.target = target.c_str();
    th_instance* raw = nullptr;
    st = th_generate(&gp, &raw);
    if (st != TH_OK) return report_error(st);
    InstancePtr inst(raw);
    char* text = nullptr;
    st = th_instance_format(inst.get(), &text);
    if (st != TH_OK) return report_error(st);
    if (!write_text(output, take(text))) return report_error(TH_INVALID_INPUT);
    return 0;
  }

  InstancePtr inst = load(input, &st);
  if (st != TH_OK) return report_error(st);

  if (*validate) {
    char* report = nullptr;
    st = th_validate(inst.get(), &report);
    const std::string rep = take(report);
    if (st == TH_OK) {
      char* text = nullptr;
      if (th_instance_format(inst.get(), &text) == TH_OK) std::cout << take(text);
    }
    std::cerr << rep;
    return static_cast<int>(st);
  }

  if (*check) {
    char* report = nullptr;
    st = th_check(inst.get(), &copt, &report);
    if (st != TH_OK && st != TH_INFEASIBLE) return report_error(st);
    std::cout << take(report);
    return static_cast<int>(st);
  }

  if (*solve) {
    th_result* raw = nullptr;
    st = th_solve(inst.get(), &copt, &raw);
    if (st != TH_OK && st != TH_INFEASIBLE) return report_error(st);
    ResultPtr res(raw);
    char* text = nullptr;
    if (th_result_solution(res.get(), &text) != TH_OK) return report_error(TH_INTERNAL);
    if (!write_text(output, take(text))) return report_error(TH_INVALID_INPUT);
    if (trace) {
      char* tr = nullptr;
      if (th_result_trace(res.get(), &tr) == TH_OK) std::cerr << take(tr);
    }
    return static_cast<int>(st);
  }

  if (*verify) {
    std::ifstream in(solution);
    if (!in) {
      std::cerr << "error: cannot open " << solution << "\n";
      return static_cast<int>(TH_INVALID_INPUT);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    char* report = nullptr;
    st = th_verify(inst.get(), buf.str().c_str(), &report);
    if (st != TH_OK && st != TH_INFEASIBLE) return report_error(st);
    std::cout << take(report);
    return static_cast<int>(st);
  }

  if (*oracle) {
    th_oracle_limits lim;
    th_oracle_limits_default(&lim);
    if (size_bound > 0) lim.cut_bound = lim.metric_bound = size_bound;
    char* report = nullptr;
    st = th_oracle(inst.get(), &lim, &report);
    if (st != TH_OK && st != TH_INFEASIBLE) return report_error(st);
    std::cout << take(report);
    return static_cast<int>(st);
  }
  return 0;
}
