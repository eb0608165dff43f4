#include "trihole.h"

#include <cstring>
#include <sstream>
#include <string>

#include "trihole/error.hpp"
#include "trihole/generator.hpp"
#include "trihole/io.hpp"
#include "trihole/metric_checker.hpp"
#include "trihole/oracle.hpp"
#include "trihole/reduction.hpp"

struct th_instance {
  trihole::Instance inst;
};

struct th_result {
  trihole::SolveResult result;
};

namespace {

thread_local std::string last_error;

th_status fail(th_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
th_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const trihole::Error& e) {
    switch (e.kind()) {
      case trihole::ErrorKind::kInvalidInput: return fail(TH_INVALID_INPUT, e.what());
      case trihole::ErrorKind::kResourceCap: return fail(TH_RESOURCE_CAP, e.what());
      case trihole::ErrorKind::kInternal: return fail(TH_INTERNAL, e.what());
    }
    return fail(TH_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(TH_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

trihole::CheckOptions to_options(const th_check_options* opt) {
  trihole::CheckOptions o;
  th_check_options d;
  th_check_options_default(&d);
  if (!opt) opt = &d;
  o.skip_metric = opt->skip_metric != 0;
  o.metric.max_quad = opt->max_quad;
  o.metric.threads = opt->threads > 0 ? opt->threads : 1;
  return o;
}

std::string check_report(const trihole::Instance& inst, const trihole::CheckOptions& opt,
                         bool* violated) {
  using trihole::ExtInt;
  std::ostringstream out;
  const trihole::ConditionCheck cc = trihole::check_conditions(inst, opt);
  *violated = cc.violated;
  if (cc.failure.kind == trihole::Infeasible::Kind::kVertexCut && cc.violated) {
    out << "mode normalized\nvertex_cut";
    for (std::int64_t v : cc.failure.vertex_cut.vertices) out << " " << v;
    out << "\ncapacity " << cc.failure.vertex_cut.capacity << "\ndemand "
        << cc.failure.vertex_cut.demand << "\nminimum " << cc.minimum.to_string()
        << "\nverdict INFEASIBLE\n";
    return out.str();
  }
  ExtInt terms[4] = {ExtInt::infinity(), ExtInt::infinity(), ExtInt::infinity(),
                     ExtInt::infinity()};
  bool metric_seen = false;
  for (const trihole::ExcessReport& r : cc.reports) {
    const ExtInt vals[4] = {r.mu1, r.nu2, r.nu3, r.mu_hat};
    for (int k = 0; k < 4; ++k) terms[k] = trihole::min(terms[k], vals[k]);
    metric_seen |= r.metric_computed;
  }
  std::string cert;
  if (cc.violated) {
    cert = cc.failure.kind == trihole::Infeasible::Kind::kMetric
               ? trihole::to_text(cc.failure.metric)
               : trihole::to_text(cc.failure.cut);
  }
  const ExtInt best = cc.minimum;
  out << "mode " << (cc.direct ? "direct" : "normalized") << "\nmu1 " << terms[0].to_string()
      << "\nnu2 " << terms[1].to_string() << "\nnu3 " << terms[2].to_string() << "\nmu_hat "
      << (opt.skip_metric ? std::string("skipped")
                          : metric_seen ? terms[3].to_string() : std::string("n/a"))
      << "\nminimum " << best.to_string() << "\n";
  if (!cert.empty()) out << "certificate " << cert << "\n";
  out << "verdict " << (cc.violated ? "INFEASIBLE" : "FEASIBLE") << "\n";
  return out.str();
}

}  // namespace

extern "C" {

const char* th_last_error(void) { return last_error.c_str(); }
const char* th_version(void) { return "1.0.0"; }
void th_string_free(char* s) { std::free(s); }

void th_check_options_default(th_check_options* opt) {
  if (!opt) return;
  opt->skip_metric = 0;
  opt->max_quad = 0;
  opt->threads = 1;
}

void th_oracle_limits_default(th_oracle_limits* lim) {
  if (!lim) return;
  const trihole::OracleLimits d;
  lim->cut_bound = d.cut_bound;
  lim->metric_bound = d.metric_bound;
}

void th_gen_params_default(th_gen_params* p) {
  if (!p) return;
  const trihole::GenParams d;
  p->seed = d.seed;
  p->n = d.n;
  p->outer_size = d.outer_size;
  p->hole_max = d.hole_max;
  p->demands = d.demands;
  p->cmax = d.cmax;
  p->dmax = d.dmax;
  p->chords = d.chords;
  p->target = "any";
  p->retries = d.retries;
}

th_status th_instance_parse(const char* text, th_instance** out) {
  return guarded([&] {
    if (!text || !out) return fail(TH_INVALID_INPUT, "null argument");
    *out = new th_instance{trihole::parse_instance_text(text)};
    return TH_OK;
  });
}

th_status th_instance_read(const char* path, th_instance** out) {
  return guarded([&] {
    if (!path || !out) return fail(TH_INVALID_INPUT, "null argument");
    *out = new th_instance{trihole::read_instance_file(path)};
    return TH_OK;
  });
}

th_status th_generate(const th_gen_params* p, th_instance** out) {
  return guarded([&] {
    if (!p || !out) return fail(TH_INVALID_INPUT, "null argument");
    trihole::GenParams g;
    g.seed = p->seed;
    g.n = p->n;
    g.outer_size = p->outer_size;
    g.hole_max = p->hole_max;
    g.demands = p->demands;
    g.cmax = p->cmax;
    g.dmax = p->dmax;
    g.chords = p->chords;
    g.target = trihole::parse_target(p->target ? p->target : "any");
    g.retries = p->retries;
    *out = new th_instance{trihole::generate(g)};
    return TH_OK;
  });
}

void th_instance_free(th_instance* inst) { delete inst; }

th_status th_instance_format(const th_instance* inst, char** text) {
  return guarded([&] {
    if (!inst || !text) return fail(TH_INVALID_INPUT, "null argument");
    *text = dup(trihole::format_instance(inst->inst));
    return TH_OK;
  });
}

int th_instance_vertex_count(const th_instance* inst) {
  return inst ? inst->inst.g().vertex_count() : 0;
}

int th_instance_edge_count(const th_instance* inst) {
  return inst ? inst->inst.g().edge_count() : 0;
}

th_status th_validate(const th_instance* inst, char** report) {
  return guarded([&] {
    if (!inst || !report) return fail(TH_INVALID_INPUT, "null argument");
    const trihole::ValidationReport r = trihole::validate_instance(inst->inst);
    *report = dup(r.to_text(inst->inst));
    if (!r.valid() || !r.eulerian) return fail(TH_INVALID_INPUT, "instance is not valid");
    return TH_OK;
  });
}

th_status th_check(const th_instance* inst, const th_check_options* opt, char** report) {
  return guarded([&] {
    if (!inst || !report) return fail(TH_INVALID_INPUT, "null argument");
    bool violated = false;
    *report = dup(check_report(inst->inst, to_options(opt), &violated));
    return violated ? TH_INFEASIBLE : TH_OK;
  });
}

th_status th_solve(const th_instance* inst, const th_check_options* opt, th_result** out) {
  return guarded([&] {
    if (!inst || !out) return fail(TH_INVALID_INPUT, "null argument");
    const trihole::ValidationReport v = trihole::validate_instance(inst->inst);
    if (!v.valid()) return fail(TH_INVALID_INPUT, v.to_text(inst->inst));
    trihole::SolveOptions so;
    so.check = to_options(opt);
    *out = new th_result{trihole::solve(inst->inst, so)};
    return (*out)->result.solved ? TH_OK : TH_INFEASIBLE;
  });
}

void th_result_free(th_result* r) { delete r; }
int th_result_solved(const th_result* r) { return r && r->result.solved ? 1 : 0; }
int64_t th_result_iterations(const th_result* r) { return r ? r->result.stats.iterations : 0; }

th_status th_result_solution(const th_result* r, char** text) {
  return guarded([&] {
    if (!r || !text) return fail(TH_INVALID_INPUT, "null argument");
    *text = dup(trihole::format_solution(r->result));
    return TH_OK;
  });
}

th_status th_result_trace(const th_result* r, char** text) {
  return guarded([&] {
    if (!r || !text) return fail(TH_INVALID_INPUT, "null argument");
    *text = dup(trihole::format_trace(r->result));
    return TH_OK;
  });
}

th_status th_verify(const th_instance* inst, const char* solution, char** report) {
  return guarded([&] {
    if (!inst || !solution || !report) return fail(TH_INVALID_INPUT, "null argument");
    const trihole::SolutionFile sol = trihole::parse_solution_text(solution);
    if (!sol.solved) {
      *report = dup("verdict INFEASIBLE, nothing to verify\n");
      return TH_OK;
    }
    const trihole::AdmissibilityReport r = trihole::check_admissible(inst->inst, sol.flow);
    *report = dup(r.to_text(inst->inst));
    return r.admissible() ? TH_OK : TH_INFEASIBLE;
  });
}

th_status th_oracle(const th_instance* inst, const th_oracle_limits* lim, char** report) {
  return guarded([&] {
    if (!inst || !report) return fail(TH_INVALID_INPUT, "null argument");
    trihole::OracleLimits l;
    if (lim) {
      l.cut_bound = lim->cut_bound;
      l.metric_bound = lim->metric_bound;
    }
    const trihole::Instance& I = inst->inst;
    using trihole::MetricFilter;
    using trihole::SetFilter;
    const auto cut_all = trihole::oracle_cut_min(I, SetFilter::kAll, 0, l).value;
    const auto cut_reg = trihole::oracle_cut_min(I, SetFilter::kRegular, 0, l).value;
    const auto met_all = trihole::oracle_metric_min(I, MetricFilter::kAll, l).value;
    const auto met_semi = trihole::oracle_metric_min(I, MetricFilter::kSemiRegular, l).value;
    const auto met_reg = trihole::oracle_metric_min(I, MetricFilter::kRegular, l).value;
    const bool ok = !(cut_all < trihole::ExtInt(0)) && !(met_all < trihole::ExtInt(0));
    std::ostringstream out;
    out << "cut_all " << cut_all.to_string() << "\ncut_regular " << cut_reg.to_string()
        << "\nmetric_all " << met_all.to_string() << "\nmetric_semi_regular "
        << met_semi.to_string() << "\nmetric_regular " << met_reg.to_string() << "\nverdict "
        << (ok ? "SOLVABLE" : "INFEASIBLE") << "\n";
    *report = dup(out.str());
    return ok ? TH_OK : TH_INFEASIBLE;
  });
}

}  // extern "C"
