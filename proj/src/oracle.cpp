#include "trihole/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "trihole/error.hpp"
#include "trihole/reduction.hpp"

namespace trihole {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_size(const Instance& inst, int bound, const char* what) {
  if (inst.g().vertex_count() > bound)
    throw_resource(std::string(what) + " enumeration refused: " +
                   std::to_string(inst.g().vertex_count()) + " vertices exceed the bound " +
                   std::to_string(bound));
}

// Boundary walk of a hole as vertex occurrences.
std::vector<int> boundary_walk(const Instance& inst, int label) {
  const Hole* h = inst.find_hole(label);
  std::vector<int> walk;
  if (!h) return walk;
  for (Dart d : inst.g().face(h->face)) walk.push_back(inst.g().tail(d));
  return walk;
}

// 0: no vertex of the walk in X, 2: all of them, 1: some.
int walk_coverage(const std::vector<int>& walk, const std::vector<char>& in_x) {
  int in = 0;
  for (int v : walk) in += in_x[v] ? 1 : 0;
  if (in == 0) return 0;
  return in == static_cast<int>(walk.size()) ? 2 : 1;
}

bool walk_segment(const std::vector<int>& walk, const std::vector<char>& in_x) {
  const int L = static_cast<int>(walk.size());
  int starts = 0;
  for (int k = 0; k < L; ++k)
    if (in_x[walk[k]] && !in_x[walk[(k + L - 1) % L]]) ++starts;
  return starts <= 1;
}

}  // namespace

bool meets_in_segment(const Instance& inst, int label, const std::vector<char>& in_x) {
  return walk_segment(boundary_walk(inst, label), in_x);
}

bool region_simply_connected(const Instance& inst, const std::vector<char>& in_x) {
  const EmbeddedGraph& g = inst.g();
  const int n = g.vertex_count(), m = g.edge_count(), nf = g.face_count();
  int first = -1, members = 0;
  for (int v = 0; v < n; ++v)
    if (in_x[v]) {
      ++members;
      if (first < 0) first = v;
    }
  if (members == 0) return false;

  // [X] connected.
  UnionFind inside(n);
  for (int e = 0; e < m; ++e)
    if (in_x[g.edge(e).u] && in_x[g.edge(e).v]) inside.unite(g.edge(e).u, g.edge(e).v);
  for (int v = 0; v < n; ++v)
    if (in_x[v] && inside.find(v) != inside.find(first)) return false;
  if (members == n) return true;

  std::vector<char> face_in(nf, 1);
  for (int f = 0; f < nf; ++f)
    for (Dart d : g.face(f))
      if (!in_x[g.tail(d)]) face_in[f] = 0;
  if (face_in[inst.outer_face]) return false;

  // The complement (vertices, open edges, open faces outside the region) must
  // be connected.
  UnionFind out(n + m + nf);
  auto edge_in = [&](int e) { return in_x[g.edge(e).u] && in_x[g.edge(e).v]; };
  for (int e = 0; e < m; ++e) {
    if (edge_in(e)) continue;
    for (int x : {g.edge(e).u, g.edge(e).v})
      if (!in_x[x]) out.unite(n + e, x);
    const auto [f1, f2] = g.faces_of_edge(e);
    if (!face_in[f1]) out.unite(n + e, n + m + f1);
    if (!face_in[f2]) out.unite(n + e, n + m + f2);
  }
  for (int f = 0; f < nf; ++f) {
    if (face_in[f]) continue;
    for (Dart d : g.face(f))
      if (!in_x[g.tail(d)]) out.unite(n + m + f, g.tail(d));
  }
  int root = -1;
  auto same = [&](int id) {
    if (root < 0) root = out.find(id);
    return out.find(id) == root;
  };
  for (int v = 0; v < n; ++v)
    if (!in_x[v] && !same(v)) return false;
  for (int e = 0; e < m; ++e)
    if (!edge_in(e) && !same(n + e)) return false;
  for (int f = 0; f < nf; ++f)
    if (!face_in[f] && !same(n + m + f)) return false;
  return true;
}

RegularityInfo is_regular(const Instance& inst, const std::vector<char>& in_x) {
  RegularityInfo info;
  info.segments = true;
  for (const Hole& h : inst.holes) {
    const std::vector<int> walk = boundary_walk(inst, h.label);
    if (!walk_segment(walk, in_x)) info.segments = false;
    if (walk_coverage(walk, in_x) == 1) info.holes_met.push_back(h.label);
  }
  info.type = static_cast<int>(info.holes_met.size());
  info.simply_connected = region_simply_connected(inst, in_x);
  info.connected = info.simply_connected;
  if (!info.connected) {
    // Distinguish plain disconnection for callers that report it.
    const EmbeddedGraph& g = inst.g();
    UnionFind uf(g.vertex_count());
    int first = -1;
    for (int e = 0; e < g.edge_count(); ++e)
      if (in_x[g.edge(e).u] && in_x[g.edge(e).v]) uf.unite(g.edge(e).u, g.edge(e).v);
    info.connected = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!in_x[v]) continue;
      if (first < 0) first = v;
      if (uf.find(v) != uf.find(first)) info.connected = false;
    }
    if (first < 0) info.connected = false;
  }
  return info;
}

std::int64_t cut_capacity(const Instance& inst, const std::vector<char>& in_x) {
  std::int64_t c = 0;
  for (int e = 0; e < inst.g().edge_count(); ++e)
    if (in_x[inst.g().edge(e).u] != in_x[inst.g().edge(e).v]) c += inst.capacity[e];
  return c;
}

std::int64_t cut_demand(const Instance& inst, const std::vector<char>& in_x) {
  std::int64_t d = 0;
  for (const Demand& dm : inst.demands)
    if (in_x[dm.s] != in_x[dm.t]) d += dm.value;
  return d;
}

SubsetResult oracle_cut_min(const Instance& inst, SetFilter filter, int type,
                            const OracleLimits& lim) {
  check_size(inst, lim.cut_bound, "cut");
  const int n = inst.g().vertex_count();
  SubsetResult best;
  std::vector<char> x(n);
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    for (int v = 0; v < n; ++v) x[v] = (mask >> v) & 1;
    const std::int64_t c = cut_capacity(inst, x), d = cut_demand(inst, x);
    if (!(ExtInt(c - d) < best.value)) continue;
    if (filter != SetFilter::kAll) {
      bool ok = true;
      if (filter == SetFilter::kSemiRegular) {
        for (const Hole& h : inst.holes) ok = ok && meets_in_segment(inst, h.label, x);
      } else {
        const RegularityInfo info = is_regular(inst, x);
        ok = info.regular() && (filter != SetFilter::kRegularType || info.type == type);
      }
      if (!ok) continue;
    }
    best.value = ExtInt(c - d);
    best.x = x;
    best.capacity = c;
    best.demand = d;
  }
  return best;
}

std::vector<RegularSet> oracle_regular_sets(const Instance& inst, const OracleLimits& lim) {
  check_size(inst, lim.cut_bound, "cut");
  const int n = inst.g().vertex_count();
  std::vector<RegularSet> out;
  std::vector<char> x(n);
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    for (int v = 0; v < n; ++v) x[v] = (mask >> v) & 1;
    const RegularityInfo info = is_regular(inst, x);
    if (!info.regular()) continue;
    out.push_back({x, info.holes_met, cut_capacity(inst, x) - cut_demand(inst, x)});
  }
  return out;
}

int k23_distance(int a, int b) {
  if (a == b) return 0;
  const bool ta = a < 2, tb = b < 2;
  return ta == tb ? 2 : 1;
}

std::int64_t metric_capacity(const Instance& inst, const std::vector<int>& sigma) {
  std::int64_t c = 0;
  for (int e = 0; e < inst.g().edge_count(); ++e)
    c += inst.capacity[e] * k23_distance(sigma[inst.g().edge(e).u], sigma[inst.g().edge(e).v]);
  return c;
}

std::int64_t metric_demand(const Instance& inst, const std::vector<int>& sigma) {
  std::int64_t d = 0;
  for (const Demand& dm : inst.demands) d += dm.value * k23_distance(sigma[dm.s], sigma[dm.t]);
  return d;
}

namespace {

std::vector<char> class_of(const std::vector<int>& sigma, int cls) {
  std::vector<char> x(sigma.size());
  for (std::size_t v = 0; v < sigma.size(); ++v) x[v] = sigma[v] == cls;
  return x;
}

}  // namespace

bool is_semi_regular(const Instance& inst, const std::vector<int>& sigma) {
  for (int i = 1; i <= 3; ++i)
    if (!inst.find_hole(i)) return false;
  for (int i = 1; i <= 3; ++i) {
    const std::vector<char> s = class_of(sigma, 1 + i);
    if (std::find(s.begin(), s.end(), 1) == s.end()) return false;
    for (int j = 1; j <= 3; ++j) {
      const std::vector<int> walk = boundary_walk(inst, j);
      const bool meets = walk_coverage(walk, s) != 0;
      if (meets == (i == j)) return false;
      if (i != j && !walk_segment(walk, s)) return false;
    }
  }
  return true;
}

bool is_regular_metric(const Instance& inst, const std::vector<int>& sigma) {
  if (!is_semi_regular(inst, sigma)) return false;
  for (int t = 0; t < 2; ++t)
    if (std::find(sigma.begin(), sigma.end(), t) == sigma.end()) return false;
  for (int i = 1; i <= 3; ++i)
    if (!region_simply_connected(inst, class_of(sigma, 1 + i))) return false;
  return true;
}

namespace {

class SigmaSearch {
 public:
  SigmaSearch(const Instance& inst, MetricFilter filter) : inst_(inst), filter_(filter) {
    const EmbeddedGraph& g = inst.g();
    n_ = g.vertex_count();
    cap_.assign(n_, {});
    dem_.assign(n_, {});
    later_demand_.assign(n_ + 1, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
      const int a = std::max(g.edge(e).u, g.edge(e).v), b = std::min(g.edge(e).u, g.edge(e).v);
      if (inst.capacity[e] != 0) cap_[a].push_back({b, inst.capacity[e]});
    }
    for (const Demand& d : inst.demands) {
      if (d.s == d.t || d.value == 0) continue;
      const int a = std::max(d.s, d.t), b = std::min(d.s, d.t);
      dem_[a].push_back({b, d.value});
      later_demand_[a] += d.value;
    }
    for (int v = n_ - 1; v >= 0; --v) later_demand_[v] += later_demand_[v + 1];
    on_hole_.assign(n_, {0, 0, 0});
    for (int i = 1; i <= 3; ++i)
      if (const Hole* h = inst.find_hole(i))
        for (Dart d : g.face(h->face)) on_hole_[g.tail(d)][i - 1] = 1;
    sigma_.assign(n_, -1);
  }

  SigmaResult run() {
    dfs(0, 0, 0, 0);
    return best_;
  }

 private:
  void dfs(int v, std::int64_t cost, int t_used, int s_used) {
    // Future terms are >= -2 * (demand touching a later vertex).
    if (best_.value.is_finite() && cost - 2 * later_demand_[v] >= best_.value.value()) return;
    if (v == n_) {
      if (filter_ == MetricFilter::kSemiRegular && !is_semi_regular(inst_, sigma_)) return;
      if (filter_ == MetricFilter::kRegular && !is_regular_metric(inst_, sigma_)) return;
      best_.value = ExtInt(cost);
      best_.sigma = sigma_;
      best_.capacity = metric_capacity(inst_, sigma_);
      best_.demand = metric_demand(inst_, sigma_);
      return;
    }
    for (int cls = 0; cls < 5; ++cls) {
      int nt = t_used, ns = s_used;
      if (cls < 2) {
        // t1 and t2 are interchangeable under every filter.
        if (cls > t_used) continue;
        nt = std::max(t_used, cls + 1);
      } else if (filter_ == MetricFilter::kAll) {
        if (cls - 2 > s_used) continue;
        ns = std::max(s_used, cls - 1);
      } else if (on_hole_[v][cls - 2]) {
        continue;
      }
      std::int64_t delta = 0;
      for (const auto& [w, c] : cap_[v]) delta += c * k23_distance(cls, sigma_[w]);
      for (const auto& [w, d] : dem_[v]) delta -= d * k23_distance(cls, sigma_[w]);
      sigma_[v] = cls;
      dfs(v + 1, cost + delta, nt, ns);
      sigma_[v] = -1;
    }
  }

  const Instance& inst_;
  MetricFilter filter_;
  int n_ = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> cap_, dem_;
  std::vector<std::int64_t> later_demand_;
  std::vector<std::array<char, 3>> on_hole_;
  std::vector<int> sigma_;
  SigmaResult best_;
};

}  // namespace

SigmaResult oracle_metric_min(const Instance& inst, MetricFilter filter, const OracleLimits& lim) {
  check_size(inst, lim.metric_bound, "metric");
  return SigmaSearch(inst, filter).run();
}

std::vector<std::vector<int>> oracle_regular_metrics(const Instance& inst,
                                                     const OracleLimits& lim) {
  check_size(inst, lim.metric_bound, "metric");
  const int n = inst.g().vertex_count();
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(n, 0);
  // Plain odometer over 5^n; t1/t2 symmetry is kept (both images listed).
  while (true) {
    if (is_regular_metric(inst, sigma)) out.push_back(sigma);
    int k = 0;
    while (k < n && sigma[k] == 4) sigma[k++] = 0;
    if (k == n) break;
    ++sigma[k];
  }
  return out;
}

bool oracle_solvable(const Instance& inst, const OracleLimits& lim) {
  if (oracle_cut_min(inst, SetFilter::kAll, 0, lim).value < ExtInt(0)) return false;
  return !(oracle_metric_min(inst, MetricFilter::kAll, lim).value < ExtInt(0));
}

std::int64_t oracle_max_eps(const Instance& inst, int label, int e, int a, int b,
                            const OracleLimits& lim) {
  std::int64_t d = 0;
  for (const Demand& dm : inst.demands)
    if (dm.hole == label && ((dm.s == a && dm.t == b) || (dm.s == b && dm.t == a))) d += dm.value;
  const std::int64_t hi = std::min(inst.capacity[e], d);
  auto feasible = [&](std::int64_t eps) {
    return oracle_solvable(reduce(inst, label, e, a, b, eps), lim);
  };
  TRIHOLE_CHECK(feasible(0), "oracle_max_eps needs a solvable state");
  if (hi <= 8) {
    std::int64_t last = 0;
    bool gap = false;
    for (std::int64_t eps = 1; eps <= hi; ++eps) {
      if (feasible(eps)) {
        TRIHOLE_CHECK(!gap, "feasible reductions do not form a prefix");
        last = eps;
      } else {
        gap = true;
      }
    }
    return last;
  }
  std::int64_t lo = 0, up = hi + 1;  // feasible(lo), !feasible(up) or up out of range
  while (up - lo > 1) {
    const std::int64_t mid = lo + (up - lo) / 2;
    (feasible(mid) ? lo : up) = mid;
  }
  if (lo > 0) TRIHOLE_CHECK(feasible(lo - 1), "feasible reductions do not form a prefix");
  return lo;
}

}  // namespace trihole
