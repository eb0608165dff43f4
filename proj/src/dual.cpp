#include "trihole/dual.hpp"

#include <queue>
#include <thread>

#include "trihole/error.hpp"

namespace trihole {

DualGraph build_dual(const Instance& inst) {
  const EmbeddedGraph& g = inst.g();
  DualGraph dual;
  dual.face_vertex.assign(g.face_count(), -1);
  std::vector<int> hole_of_face(g.face_count(), -1);
  for (int h = 0; h < static_cast<int>(inst.holes.size()); ++h)
    hole_of_face[inst.holes[h].face] = h;
  for (int f = 0; f < g.face_count(); ++f)
    if (hole_of_face[f] == -1) dual.face_vertex[f] = dual.vertex_count++;

  for (const Hole& h : inst.holes) {
    dual.boundaries.push_back(hole_boundary(inst, h.label));
    std::vector<int> z;
    for (int k = 0; k < dual.boundaries.back().size(); ++k) z.push_back(dual.vertex_count++);
    dual.terminals.push_back(std::move(z));
  }

  dual.ends.resize(g.edge_count());
  dual.length.resize(g.edge_count());
  dual.incident.assign(dual.vertex_count, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [f1, f2] = g.faces_of_edge(e);
    auto side = [&](int f) {
      const int h = hole_of_face[f];
      if (h == -1) return dual.face_vertex[f];
      return dual.terminals[h][dual.boundaries[h].edge_position[e]];
    };
    dual.ends[e] = {side(f1), side(f2)};
    dual.length[e] = inst.capacity[e];
    dual.incident[dual.ends[e][0]].push_back(e);
    if (dual.ends[e][1] != dual.ends[e][0]) dual.incident[dual.ends[e][1]].push_back(e);
  }
  return dual;
}

namespace {

// Label-setting shortest paths from `source`; among equal distances the
// predecessor with the smallest dual vertex id wins.
void dijkstra(const DualGraph& dual, int source, std::vector<ExtInt>& dist,
              std::vector<int>& pred) {
  const int n = dual.vertex_count;
  std::vector<std::int64_t> d(n, 0);
  std::vector<char> reached(n, 0), done(n, 0);
  std::vector<int> from(n, -1);  // predecessor vertex
  pred.assign(n, -1);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  reached[source] = 1;
  pq.push({0, source});
  while (!pq.empty()) {
    const auto [dx, x] = pq.top();
    pq.pop();
    if (done[x] || dx != d[x]) continue;
    done[x] = 1;
    for (int e : dual.incident[x]) {
      const int y = dual.other_end(e, x);
      if (done[y]) continue;
      const std::int64_t nd = dx + dual.length[e];
      if (!reached[y] || nd < d[y] || (nd == d[y] && x < from[y])) {
        const bool improved = !reached[y] || nd < d[y];
        reached[y] = 1;
        d[y] = nd;
        from[y] = x;
        pred[y] = e;
        if (improved) pq.push({nd, y});
      }
    }
  }
  dist.assign(n, ExtInt::infinity());
  for (int x = 0; x < n; ++x)
    if (reached[x]) dist[x] = d[x];
}

}  // namespace

DistanceTable::DistanceTable(const DualGraph& dual, int threads) : dual_(&dual) {
  int total = 0;
  for (const auto& z : dual.terminals) {
    offset_.push_back(total);
    size_.push_back(static_cast<int>(z.size()));
    total += static_cast<int>(z.size());
  }
  dist_.resize(total);
  pred_.resize(total);
  std::vector<std::pair<int, int>> jobs;
  for (int h = 0; h < dual.hole_count(); ++h)
    for (int p = 0; p < size_[h]; ++p) jobs.push_back({h, p});
  auto run = [&](int worker, int stride) {
    for (std::size_t j = worker; j < jobs.size(); j += stride) {
      const auto [h, p] = jobs[j];
      dijkstra(dual, dual.terminals[h][p], dist_[index(h, p)], pred_[index(h, p)]);
    }
  };
  threads = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  if (threads == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(run, w, threads);
    for (auto& t : pool) t.join();
  }
}

ExtInt DistanceTable::to_vertex(int h, int p, int x) const { return dist_[index(h, p)][x]; }

ExtInt DistanceTable::between(int h, int p, int h2, int p2) const {
  return dist_[index(h, p)][dual_->terminals[h2][p2]];
}

int DistanceTable::pred_edge(int h, int p, int x) const { return pred_[index(h, p)][x]; }

std::vector<int> DistanceTable::path(int h, int p, int h2, int p2) const {
  std::vector<int> edges;
  int x = dual_->terminals[h2][p2];
  const int source = dual_->terminals[h][p];
  if (between(h, p, h2, p2).is_infinite()) return edges;
  while (x != source) {
    const int e = pred_edge(h, p, x);
    TRIHOLE_CHECK(e >= 0, "broken predecessor chain");
    edges.push_back(e);
    x = dual_->other_end(e, x);
  }
  return {edges.rbegin(), edges.rend()};
}

}  // namespace trihole
