#include "trihole/generator.hpp"

#include <algorithm>
#include <memory>
#include <queue>
#include <random>

#include "trihole/error.hpp"
#include "trihole/oracle.hpp"

namespace trihole {

GenTarget parse_target(const std::string& s) {
  if (s == "any") return GenTarget::kAny;
  if (s == "solvable") return GenTarget::kSolvable;
  if (s == "cut-tight") return GenTarget::kCutTight;
  if (s == "metric-violating") return GenTarget::kMetricViolating;
  throw_invalid("unknown generator target '" + s + "'");
}

std::string to_string(GenTarget t) {
  switch (t) {
    case GenTarget::kAny: return "any";
    case GenTarget::kSolvable: return "solvable";
    case GenTarget::kCutTight: return "cut-tight";
    case GenTarget::kMetricViolating: return "metric-violating";
  }
  return "?";
}

namespace {

// mt19937_64 output is fixed by the standard; the reduction below is ours, so
// files do not depend on the library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
  }
  bool chance(int percent) { return uniform(0, 99) < percent; }

 private:
  std::mt19937_64 eng_;
};

struct Builder {
  std::vector<EdgeEnds> edges;
  std::vector<std::vector<Dart>> rot;

  EmbeddedGraph graph() const {
    std::vector<std::int64_t> elabels(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) elabels[e] = static_cast<std::int64_t>(e) + 1;
    return EmbeddedGraph::build(static_cast<int>(rot.size()), edges, rot, {}, elabels);
  }

  int add_vertex() {
    rot.emplace_back();
    return static_cast<int>(rot.size()) - 1;
  }

  // New edge a-b; its darts go right after `after_a` at a and `after_b` at b
  // (-1 to append).
  int add_edge(int a, int b, Dart after_a, Dart after_b) {
    const int e = static_cast<int>(edges.size());
    edges.push_back({a, b});
    auto put = [&](int x, Dart d, Dart after) {
      auto& r = rot[x];
      if (after < 0) {
        r.push_back(d);
      } else {
        r.insert(std::find(r.begin(), r.end(), after) + 1, d);
      }
    };
    put(a, dart_of(e, true), after_a);
    put(b, dart_of(e, false), after_b);
    return e;
  }
};

// Path of `k` new vertices (k = 0: a single edge) across face f between the
// corners at face positions i and j.
void add_ear(Builder& b, const EmbeddedGraph& g, int f, int i, int j, int k) {
  const auto darts = g.face(f);
  // The corner after darts[i] sits at head(darts[i]) between its reverse and
  // the next face dart, so new darts go right after reverse(darts[i]).
  const Dart pi = reverse(darts[i]), pj = reverse(darts[j]);
  const int a = g.head(darts[i]), z = g.head(darts[j]);
  int prev = a;
  Dart prev_after = pi;
  for (int s = 0; s < k; ++s) {
    const int w = b.add_vertex();
    const int e = b.add_edge(prev, w, prev_after, -1);
    prev = w;
    prev_after = dart_of(e, false);
  }
  b.add_edge(prev, z, prev_after, pj);
}

Builder grow(const GenParams& p, Rng& rng) {
  Builder b;
  const int L = std::clamp(p.outer_size, 2, std::max(2, p.n));
  for (int v = 0; v < L; ++v) b.add_vertex();
  for (int v = 0; v < L; ++v) b.add_edge(v, (v + 1) % L, -1, -1);
  // Rotation at v: edge v forward, then edge v-1 reversed.
  for (int v = 0; v < L; ++v) b.rot[v] = {dart_of(v, true), dart_of((v + L - 1) % L, false)};
  const int outer_dart = dart_of(0, false);

  const int chords = p.chords >= 0 ? p.chords : p.n / 2;
  int chords_done = 0;
  while (true) {
    const EmbeddedGraph g = b.graph();
    const int outer = g.face_of(outer_dart);
    const int vertices = g.vertex_count();
    const int inner_faces = g.face_count() - 1;
    if (vertices >= p.n && chords_done >= chords && inner_faces >= 2) break;

    std::vector<int> inner;
    for (int f = 0; f < g.face_count(); ++f)
      if (f != outer) inner.push_back(f);
    const int f = inner[rng.uniform(0, static_cast<std::int64_t>(inner.size()) - 1)];
    const int len = static_cast<int>(g.face(f).size());
    const int i = static_cast<int>(rng.uniform(0, len - 1));
    int j = static_cast<int>(rng.uniform(0, len - 2));
    if (j >= i) ++j;
    int k = 0;
    if (vertices < p.n) k = static_cast<int>(rng.uniform(1, std::min(3, p.n - vertices)));
    // A chord between neighbors makes a digon; allow it only when nothing else fits.
    const bool adjacent = (j == (i + 1) % len) || (i == (j + 1) % len);
    if (k == 0 && adjacent && len > 3) continue;
    add_ear(b, g, f, i, j, k);
    if (k == 0) ++chords_done;
  }
  return b;
}

std::vector<int> route(const EmbeddedGraph& g, int s, int t, Rng& rng) {
  const int n = g.vertex_count();
  std::vector<std::int64_t> w(g.edge_count());
  for (auto& x : w) x = rng.uniform(1, 10);
  std::vector<std::int64_t> dist(n, INT64_MAX);
  std::vector<int> via(n, -1);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    const auto [d, x] = pq.top();
    pq.pop();
    if (d != dist[x]) continue;
    for (Dart o : g.rotation(x)) {
      const int y = g.head(o);
      const std::int64_t nd = d + w[edge_of(o)];
      if (nd < dist[y]) {
        dist[y] = nd;
        via[y] = o;
        pq.push({nd, y});
      }
    }
  }
  std::vector<int> path;
  for (int x = t; x != s; x = g.tail(via[x])) path.push_back(edge_of(via[x]));
  return path;
}

void repair_parity(Instance& inst) {
  const EmbeddedGraph& g = inst.g();
  const int n = g.vertex_count();
  std::vector<int> odd(n, 0);
  for (int v : odd_parity_vertices(inst)) odd[v] = 1;
  std::vector<int> order, parent_edge(n, -1), seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (Dart o : g.rotation(order[k])) {
      const int y = g.head(o);
      if (seen[y]) continue;
      seen[y] = 1;
      parent_edge[y] = edge_of(o);
      order.push_back(y);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (!odd[v] || parent_edge[v] < 0) continue;
    const int e = parent_edge[v];
    ++inst.capacity[e];
    odd[v] = 0;
    const int p = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
    odd[p] ^= 1;
  }
}

Instance attempt(const GenParams& p, Rng& rng) {
  const Builder b = grow(p, rng);
  Instance inst;
  inst.graph = std::make_shared<const EmbeddedGraph>(b.graph());
  const EmbeddedGraph& g = inst.g();
  const int outer = g.face_of(dart_of(0, false));
  inst.outer_face = outer;

  // Two bounded holes, preferring faces no longer than hole_max.
  std::vector<int> small, any;
  for (int f = 0; f < g.face_count(); ++f) {
    if (f == outer) continue;
    any.push_back(f);
    if (static_cast<int>(g.face(f).size()) <= p.hole_max) small.push_back(f);
  }
  std::vector<int>& pool = small.size() >= 2 ? small : any;
  const int x = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1));
  int y = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 2));
  if (y >= x) ++y;
  inst.holes = {{1, pool[x]}, {2, pool[y]}, {3, outer}};

  for (int k = 0; k < p.demands; ++k) {
    const int h = static_cast<int>(rng.uniform(0, 2));
    std::vector<int> verts;
    for (Dart d : g.face(inst.holes[h].face)) verts.push_back(g.tail(d));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() < 2) continue;
    const int i = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(verts.size()) - 1));
    int j = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(verts.size()) - 2));
    if (j >= i) ++j;
    inst.demands.push_back({verts[i], verts[j], h + 1, rng.uniform(1, p.dmax)});
  }

  inst.capacity.assign(g.edge_count(), 0);
  if (p.target == GenTarget::kSolvable || p.target == GenTarget::kCutTight) {
    for (const Demand& d : inst.demands)
      for (int e : route(g, d.s, d.t, rng)) inst.capacity[e] += d.value;
    if (p.target == GenTarget::kSolvable)
      for (auto& c : inst.capacity) c += 2 * rng.uniform(0, 1);
  } else {
    for (auto& c : inst.capacity) c = rng.uniform(1, p.cmax);
  }
  inst.demands = canonical_demands(std::move(inst.demands));
  repair_parity(inst);
  return inst;
}

// K_{2,3} with every edge subdivided at random, unit-scale demands between
// consecutive s-vertices and between t1 and t2. All cuts hold while the metric
// of the K_{2,3} map itself falls short by 2k; a random bump may repair it.
Instance gadget(const GenParams& p, Rng& rng) {
  Builder b;
  const int t1 = b.add_vertex(), t2 = b.add_vertex();
  int s[3];
  for (int& x : s) x = b.add_vertex();
  std::vector<int> extra(6, 0);
  for (int k = 5; k < p.n; ++k) ++extra[rng.uniform(0, 5)];
  // Path from x to y; returns the first and last darts (at x and at y).
  auto path = [&](int x, int y, int inner) {
    int prev = x;
    Dart first = -1, last = -1;
    for (int k = 0; k <= inner; ++k) {
      const int w = k == inner ? y : b.add_vertex();
      const int e = b.add_edge(prev, w, -1, -1);
      if (k == 0) first = dart_of(e, true);
      last = dart_of(e, false);
      prev = w;
    }
    return std::pair{first, last};
  };
  Dart at_t1[3], at_t2[3];
  for (int i = 0; i < 3; ++i) {
    at_t1[i] = path(t1, s[i], extra[i]).first;
    at_t2[i] = path(s[i], t2, extra[3 + i]).second;
  }
  b.rot[t1] = {at_t1[2], at_t1[1], at_t1[0]};
  b.rot[t2] = {at_t2[0], at_t2[1], at_t2[2]};

  Instance inst;
  inst.graph = std::make_shared<const EmbeddedGraph>(b.graph());
  const EmbeddedGraph& g = inst.g();
  auto face_has = [&](int f, int v) {
    for (Dart d : g.face(f))
      if (g.tail(d) == v) return true;
    return false;
  };
  // Face between s_i and s_{i+1}; the one between s_3 and s_1 is outer.
  int between[3];
  for (int i = 0; i < 3; ++i)
    for (int f = 0; f < g.face_count(); ++f)
      if (face_has(f, s[i]) && face_has(f, s[(i + 1) % 3])) between[i] = f;
  inst.outer_face = between[2];
  inst.holes = {{1, between[0]}, {2, between[1]}, {3, between[2]}};
  const std::int64_t k = rng.uniform(1, std::max<std::int64_t>(1, std::min(p.cmax, p.dmax)));
  inst.capacity.assign(g.edge_count(), k);
  for (int i = 0; i < 3; ++i) inst.demands.push_back({s[i], s[(i + 1) % 3], i + 1, k});
  inst.demands.push_back({t1, t2, static_cast<int>(rng.uniform(1, 3)), k});
  if (rng.chance(50)) inst.capacity[rng.uniform(0, g.edge_count() - 1)] += 1;
  inst.demands = canonical_demands(std::move(inst.demands));
  repair_parity(inst);
  return inst;
}

}  // namespace

Instance generate(const GenParams& p) {
  if (p.n < 2 || p.n > 100000) throw_invalid("vertex count out of range");
  if (p.outer_size < 2) throw_invalid("outer hole needs at least two edges");
  if (p.cmax < 1 || p.dmax < 1) throw_invalid("cmax and dmax must be positive");
  Rng rng(p.seed);
  if (p.target != GenTarget::kMetricViolating) return attempt(p, rng);

  OracleLimits lim;
  if (p.n > lim.metric_bound) throw_invalid("metric-violating target needs n <= 10");
  if (p.n < 5) throw_invalid("metric-violating target needs n >= 5");
  for (int k = 0; k < p.retries; ++k) {
    Instance inst = gadget(p, rng);
    if (oracle_cut_min(inst, SetFilter::kAll, 0, lim).value < ExtInt(0)) continue;
    if (oracle_metric_min(inst, MetricFilter::kAll, lim).value < ExtInt(0)) return inst;
  }
  throw_resource("no metric-violating instance within " + std::to_string(p.retries) +
                 " attempts");
}

}  // namespace trihole
