#include "trihole/reduction.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "trihole/cut_checker.hpp"
#include "trihole/error.hpp"

namespace trihole {

OrientedPair orient_pair(const BoundaryCycle& cycle, int k, int a, int b) {
  const int L = cycle.size();
  TRIHOLE_CHECK(k >= 0 && k < L, "edge position out of range");
  const int pa = cycle.vertex_position[a], pb = cycle.vertex_position[b];
  if (pa < 0 || pb < 0) throw_invalid("pair endpoint not on a simple stretch of the boundary");
  OrientedPair o;
  o.u = cycle.vertices[k];
  o.v = cycle.vertices[(k + 1) % L];
  // Distance walked from v to each endpoint.
  const int start = (k + 1) % L;
  const int da = (pa - start + L) % L, db = (pb - start + L) % L;
  o.t = da <= db ? a : b;
  o.s = o.t == a ? b : a;
  return o;
}

Instance reduce(const Instance& inst, int label, int e, int a, int b, std::int64_t eps) {
  if (eps < 0) throw_invalid("reduction amount must be nonnegative");
  Instance out = inst;
  if (eps == 0) {
    out.demands = canonical_demands(out.demands);
    return out;
  }
  if (eps > inst.capacity[e]) throw_invalid("reduction exceeds the edge capacity");
  std::int64_t d = 0;
  for (const Demand& dm : inst.demands)
    if (dm.hole == label && ((dm.s == a && dm.t == b) || (dm.s == b && dm.t == a))) d += dm.value;
  if (eps > d) throw_invalid("reduction exceeds the pair demand");

  const BoundaryCycle bc = hole_boundary(inst, label);
  const int k = bc.edge_position[e];
  if (k < 0) throw_invalid("reduction edge is not on the hole boundary");
  const OrientedPair o = orient_pair(bc, k, a, b);

  out.capacity[e] -= eps;
  out.demands.push_back({o.s, o.t, label, -eps});
  if (o.s != o.u) out.demands.push_back({o.s, o.u, label, eps});
  if (o.v != o.t) out.demands.push_back({o.v, o.t, label, eps});
  // canonical_demands merges the negative entry into the existing pair.
  std::vector<Demand> merged = canonical_demands(std::move(out.demands));
  for (const Demand& dm : merged) TRIHOLE_CHECK(dm.value > 0, "negative demand after reduction");
  out.demands = std::move(merged);
  return out;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int holes_with_demand(const Instance& inst) {
  std::set<int> h;
  for (const Demand& d : inst.demands)
    if (d.value > 0) h.insert(d.hole);
  return static_cast<int>(h.size());
}

ExtInt checked_minimum(const Instance& inst, const CheckOptions& opt) {
  const ExtInt v = steering_minimum(inst, opt);
  if (v.is_finite()) TRIHOLE_CHECK(v.value() % 2 == 0, "odd excess on an Eulerian state");
  return v;
}

}  // namespace

ExtInt steering_minimum(const Instance& inst, const CheckOptions& opt) {
  CheckOptions o = opt;
  if (inst.holes.size() < 3) o.skip_metric = true;
  return check_excess(inst, o).minimum();
}

EpsResult max_feasible_eps(const Instance& inst, int label, int e, int a, int b,
                           const CheckOptions& opt) {
  EpsResult r;
  std::int64_t d = 0;
  for (const Demand& dm : inst.demands)
    if (dm.hole == label && ((dm.s == a && dm.t == b) || (dm.s == b && dm.t == a))) d += dm.value;
  r.eps1 = std::min(inst.capacity[e], d);
  if (r.eps1 == 0) return r;

  r.nu1 = checked_minimum(reduce(inst, label, e, a, b, r.eps1), opt);
  r.rounds = 1;
  if (!(r.nu1 < ExtInt(0))) {
    r.eps = r.eps1;
    return r;
  }
  if (inst.holes.size() < 3) {
    r.eps = r.eps1 + r.nu1.value() / 2;
  } else {
    const std::int64_t eps2 = r.eps1 + floor_div(r.nu1.value(), 4);
    TRIHOLE_CHECK(eps2 >= 0, "second reduction step is negative");
    r.nu2 = checked_minimum(reduce(inst, label, e, a, b, eps2), opt);
    r.rounds = 2;
    r.eps = r.nu2 < ExtInt(0) ? eps2 + r.nu2.value() / 2 : eps2;
  }
  TRIHOLE_CHECK(r.eps >= 0, "maximum reduction is negative at a solvable state");
  return r;
}

Multiflow unwind(const ReductionRecord& rec, const Multiflow& reduced) {
  if (rec.eps == 0) return reduced;
  Multiflow pool = reduced;
  Multiflow mid;
  mid.paths.push_back({{rec.u, rec.v}, {rec.edge}, rec.eps});
  Multiflow joined = mid;
  if (rec.s != rec.u) {
    SubflowSplit g = extract_subflow(pool, rec.s, rec.u, rec.eps);
    pool = std::move(g.remainder);
    joined = concatenate_flows(g.subflow, joined);
  }
  if (rec.v != rec.t) {
    SubflowSplit h = extract_subflow(pool, rec.v, rec.t, rec.eps);
    pool = std::move(h.remainder);
    joined = concatenate_flows(joined, h.subflow);
  }
  pool.append(joined);
  return pool;
}

namespace {

using ExhaustedKey = std::tuple<int, std::int64_t, std::int64_t, std::int64_t>;

struct Context {
  const SolveOptions& opt;
  const Observer& observer;
  SolveResult& result;
};

Multiflow solve_instance(const Instance& inst, Context& ctx, std::set<ExhaustedKey> exhausted,
                         int depth);

Multiflow solve_block(const Instance& block, Context& ctx, std::set<ExhaustedKey> exhausted,
                      int depth) {
  ++ctx.result.stats.blocks_solved;
  ctx.result.stats.max_depth = std::max<std::int64_t>(ctx.result.stats.max_depth, depth);
  Instance state = block;
  state.demands = canonical_demands(state.demands);
  const EmbeddedGraph& g = state.g();
  std::vector<BoundaryCycle> cycles;
  for (const Hole& h : state.holes) cycles.push_back(hole_boundary(state, h.label));
  const int H = static_cast<int>(state.holes.size());

  std::vector<ReductionRecord> records;
  Multiflow flow;
  int rr = 0;
  while (true) {
    if (state.demands.empty()) break;

    // Next unexhausted (edge, pair), holes round-robin.
    int hi = -1, k = -1;
    const Demand* pick = nullptr;
    for (int off = 0; off < H && !pick; ++off) {
      const int h = (rr + off) % H;
      const int label = state.holes[h].label;
      for (int pos = 0; pos < cycles[h].size() && !pick; ++pos) {
        const int e = cycles[h].edges[pos];
        if (state.capacity[e] == 0) continue;
        for (const Demand& d : state.demands) {
          if (d.hole != label) continue;
          const std::int64_t x = g.vertex_label(d.s), y = g.vertex_label(d.t);
          if (exhausted.count({label, g.edge_label(e), std::min(x, y), std::max(x, y)})) continue;
          hi = h;
          k = pos;
          pick = &d;
          break;
        }
      }
    }
    if (!pick) {
      throw_internal("scheduler exhausted with " + std::to_string(state.demands.size()) +
                     " demand pairs left on " + std::to_string(holes_with_demand(state)) +
                     " holes");
    }
    rr = hi + 1;
    const int label = state.holes[hi].label;
    const int e = cycles[hi].edges[k];
    const int a = pick->s, b = pick->t;
    const std::int64_t la = g.vertex_label(a), lb = g.vertex_label(b);

    ++ctx.result.stats.iterations;
    const EpsResult er = max_feasible_eps(state, label, e, a, b, ctx.opt.check);
    ctx.result.stats.checker_rounds += er.rounds;
    if (ctx.observer) ctx.observer({&state, label, e, a, b, er, depth});
    exhausted.insert({label, g.edge_label(e), std::min(la, lb), std::max(la, lb)});
    if (er.eps == 0) {
      ++ctx.result.stats.zero_eps;
      continue;
    }

    const OrientedPair o = orient_pair(cycles[hi], k, a, b);
    ReductionRecord rec{label,
                        g.edge_label(e),
                        g.vertex_label(o.s),
                        g.vertex_label(o.u),
                        g.vertex_label(o.v),
                        g.vertex_label(o.t),
                        er.eps};
    records.push_back(rec);
    ctx.result.trace.push_back(rec);
    state = reduce(state, label, e, a, b, er.eps);
    TRIHOLE_CHECK(is_eulerian(state), "reduction broke the parity condition");

    bool hole_emptied = false;
    for (const Hole& h : state.holes) {
      bool has = false;
      for (const Demand& d : state.demands) has |= d.hole == h.label;
      if (!has) {
        hole_emptied = true;
        ctx.result.events.push_back("hole " + std::to_string(h.label) + " withdrawn");
      }
    }
    if (state.capacity[e] == 0 || hole_emptied) {
      if (state.capacity[e] == 0)
        ctx.result.events.push_back("edge " + std::to_string(g.edge_label(e)) + " deleted: " +
                                    to_string(delete_edge(state, e).event));
      flow = solve_instance(state, ctx, exhausted, depth + 1);
      state.demands.clear();
      break;
    }
  }
  for (auto it = records.rbegin(); it != records.rend(); ++it) flow = unwind(*it, flow);
  return flow;
}

Multiflow solve_instance(const Instance& inst, Context& ctx, std::set<ExhaustedKey> exhausted,
                         int depth) {
  const Normalization norm = normalize(inst);
  TRIHOLE_CHECK(norm.feasible, "a solvable state split into an infeasible one");
  std::vector<Multiflow> flows;
  for (const BlockProblem& bp : norm.blocks) {
    if (bp.bridge) {
      flows.push_back(solve_bridge(bp));
    } else {
      flows.push_back(solve_block(bp.instance, ctx, exhausted, depth));
    }
  }
  return glue(norm, flows);
}

}  // namespace

bool directly_checkable(const Instance& inst) {
  for (std::int64_t c : inst.capacity)
    if (c <= 0) return false;
  const EmbeddedGraph& g = inst.g();
  for (const Hole& h : inst.holes) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (Dart d : g.face(h.face)) {
      if (seen[g.tail(d)]) return false;
      seen[g.tail(d)] = 1;
    }
  }
  return true;
}

namespace {

// The cut condition is reported first: a violated cut term wins over a more
// negative metric term.
void record_violation(const ExcessReport& r, Infeasible& f) {
  const ExtInt cut = r.cut_minimum();
  f.kind = Infeasible::Kind::kCut;
  if (cut < ExtInt(0)) {
    f.excess = cut.value();
    f.cut = r.mu1 == cut ? r.cut1 : r.nu2 == cut ? r.cut2 : r.cut3;
  } else {
    f.excess = r.mu_hat.value();
    f.kind = Infeasible::Kind::kMetric;
    f.metric = r.metric;
  }
}

}  // namespace

ConditionCheck check_conditions(const Instance& inst, const CheckOptions& opt) {
  ConditionCheck out;
  std::vector<const Instance*> targets;
  Normalization norm;
  if (directly_checkable(inst)) {
    out.direct = true;
    targets.push_back(&inst);
  } else {
    norm = normalize(inst);
    if (!norm.feasible) {
      out.violated = true;
      out.failure.kind = Infeasible::Kind::kVertexCut;
      out.failure.vertex_cut = norm.violated;
      out.failure.excess = norm.violated.excess();
      out.minimum = out.failure.excess;
      return out;
    }
    for (const BlockProblem& bp : norm.blocks)
      if (!bp.bridge) targets.push_back(&bp.instance);
  }
  for (const Instance* t : targets) {
    out.reports.push_back(check_excess(*t, opt));
    out.minimum = min(out.minimum, out.reports.back().minimum());
  }
  out.violated = out.minimum < ExtInt(0);
  if (out.violated) {
    // First violated block, cut terms before the metric term.
    const ExcessReport* pick = nullptr;
    for (const ExcessReport& r : out.reports)
      if (!pick && r.cut_minimum() < ExtInt(0)) pick = &r;
    for (const ExcessReport& r : out.reports)
      if (!pick && r.violated()) pick = &r;
    record_violation(*pick, out.failure);
  }
  return out;
}

SolveResult solve(const Instance& inst, const SolveOptions& opt, const Observer& observer) {
  if (!is_eulerian(inst)) throw_invalid("instance is not Eulerian; refusing to solve");
  SolveResult result;
  if (opt.verify_input) {
    ConditionCheck cc = check_conditions(inst, opt.check);
    if (cc.violated) {
      result.failure = std::move(cc.failure);
      return result;
    }
  }
  const Normalization norm = normalize(inst);
  if (!norm.feasible) {
    result.failure.kind = Infeasible::Kind::kVertexCut;
    result.failure.vertex_cut = norm.violated;
    result.failure.excess = norm.violated.excess();
    return result;
  }
  Context ctx{opt, observer, result};
  std::vector<Multiflow> flows;
  for (const BlockProblem& bp : norm.blocks)
    flows.push_back(bp.bridge ? solve_bridge(bp) : solve_block(bp.instance, ctx, {}, 0));
  result.flow = canonical_multiflow(glue(norm, flows));
  result.solved = true;
  return result;
}

}  // namespace trihole
