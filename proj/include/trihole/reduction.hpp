#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "trihole/excess.hpp"
#include "trihole/instance.hpp"
#include "trihole/metric_checker.hpp"
#include "trihole/multiflow.hpp"
#include "trihole/normalize.hpp"

namespace trihole {

// Pair st with boundary edge e = uv such that s, u, v, t follow in this order
// along the hole boundary. Vertex indices.
struct OrientedPair {
  int s = 0, u = 0, v = 0, t = 0;
};

// Orientation of pair {a, b} against the boundary edge at position k of the
// cycle: u, v are the ends of that edge in cycle order and t is the first pair
// endpoint met walking on from v. Either walking direction yields the same
// split pairs su and vt.
OrientedPair orient_pair(const BoundaryCycle& cycle, int k, int a, int b);

// The (e, st, eps)-reduction on hole `label`: c(e) and d(st) drop by eps,
// d(su) and d(vt) grow by eps (pairs with equal ends vanish). Demands come
// back canonical.
Instance reduce(const Instance& inst, int label, int e, int a, int b, std::int64_t eps);

// Record of one applied reduction, by labels so it survives re-indexing.
struct ReductionRecord {
  int hole = 0;
  std::int64_t edge = 0;
  std::int64_t s = 0, u = 0, v = 0, t = 0;
  std::int64_t eps = 0;
};

// Reverses one reduction on a flow of the reduced problem: eps units of s-u
// and v-t paths are joined through e into s-t paths.
Multiflow unwind(const ReductionRecord& rec, const Multiflow& reduced);

struct SolveOptions {
  CheckOptions check;
  // Top-level excess check before any reduction.
  bool verify_input = true;
};

// Excess minimum used to steer reductions: cut terms, plus the metric term
// when three holes carry demand.
ExtInt steering_minimum(const Instance& inst, const CheckOptions& opt);

// Largest feasible eps for (e, st) at a solvable state: three checker rounds
// with three holes, two with fewer.
struct EpsResult {
  std::int64_t eps = 0;
  std::int64_t eps1 = 0;
  ExtInt nu1 = ExtInt::infinity();
  ExtInt nu2 = ExtInt::infinity();
  int rounds = 0;
};
EpsResult max_feasible_eps(const Instance& inst, int label, int e, int a, int b,
                           const CheckOptions& opt = {});

// One iteration as seen by an observer.
struct IterationEvent {
  const Instance* state = nullptr;  // before the reduction
  int hole = 0;                     // label
  int edge = 0;                     // edge index in `state`
  int a = 0, b = 0;                 // pair, vertex indices in `state`
  EpsResult eps;
  int depth = 0;
};

struct SolveStats {
  std::int64_t iterations = 0;
  std::int64_t checker_rounds = 0;
  std::int64_t blocks_solved = 0;
  std::int64_t max_depth = 0;
  std::int64_t zero_eps = 0;  // scheduler picks that yielded eps 0
};

using Observer = std::function<void(const IterationEvent&)>;

struct Infeasible {
  enum class Kind { kVertexCut, kCut, kMetric };
  Kind kind = Kind::kCut;
  VertexCutCertificate vertex_cut;
  CutCertificate cut;
  MetricCertificate metric;
  std::int64_t excess = 0;
};

// Top-level verdict of the excess checks. The instance is checked as given
// when every capacity is positive and every hole boundary is a simple cycle;
// otherwise each block of its normalization is checked.
struct ConditionCheck {
  bool direct = false;
  bool violated = false;
  Infeasible failure;                  // when violated
  std::vector<ExcessReport> reports;   // one (direct) or one per non-bridge block
  ExtInt minimum = ExtInt::infinity();
};
bool directly_checkable(const Instance& inst);
ConditionCheck check_conditions(const Instance& inst, const CheckOptions& opt = {});

struct SolveResult {
  bool solved = false;
  Multiflow flow;       // when solved
  Infeasible failure;   // when not
  std::vector<ReductionRecord> trace;
  std::vector<std::string> events;
  SolveStats stats;
};

// Decides solvability and, when solvable, builds an integer multiflow.
// Requires an Eulerian instance; throws Error(kInvalidInput) otherwise.
SolveResult solve(const Instance& inst, const SolveOptions& opt = {},
                  const Observer& observer = {});

}  // namespace trihole
