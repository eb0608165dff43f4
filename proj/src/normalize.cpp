#include "trihole/normalize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "trihole/error.hpp"

namespace trihole {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Biconnected blocks of g as edge lists (iterative Tarjan on edges).
std::vector<std::vector<int>> biconnected_blocks(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<int>> blocks;
  std::vector<int> edge_stack;
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    int next;  // index into rotation
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1 || g.degree(root) == 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.next < g.degree(fr.v)) {
        const Dart d = g.rotation(fr.v)[fr.next++];
        const int e = edge_of(d);
        if (e == fr.parent_edge) continue;
        const int w = g.head(d);
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[fr.v]) {
          edge_stack.push_back(e);
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
        continue;
      }
      const Frame done = fr;
      stack.pop_back();
      if (stack.empty()) break;
      const int p = stack.back().v;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] >= disc[p]) {
        std::vector<int> block;
        while (true) {
          const int e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

Normalization normalize(const Instance& inst) {
  const EmbeddedGraph& g = inst.g();
  Normalization out;

  std::vector<int> zero_edges;
  for (int e = 0; e < g.edge_count(); ++e)
    if (inst.capacity[e] == 0) zero_edges.push_back(e);
  const EmbeddedGraph gs = g.without_edges(zero_edges);
  std::vector<int> stripped_to_orig;  // edge index in gs -> edge index in g
  for (int e = 0; e < g.edge_count(); ++e)
    if (inst.capacity[e] != 0) stripped_to_orig.push_back(e);

  // Regions of the plane once zero edges are gone.
  UnionFind regions(g.face_count());
  for (int e : zero_edges) {
    const auto [f1, f2] = g.faces_of_edge(e);
    regions.unite(f1, f2);
  }

  const std::vector<Demand> demands = canonical_demands(inst.demands);

  int comp_count = 0;
  const std::vector<int> comp = gs.components(&comp_count);
  for (const Demand& d : demands) {
    if (comp[d.s] == comp[d.t]) continue;
    out.feasible = false;
    const int c = comp[d.s];
    for (int v = 0; v < g.vertex_count(); ++v)
      if (comp[v] == c) out.violated.vertices.push_back(g.vertex_label(v));
    for (const Demand& x : demands)
      if ((comp[x.s] == c) != (comp[x.t] == c)) out.violated.demand += x.value;
    return out;
  }

  const std::vector<std::vector<int>> blocks = biconnected_blocks(gs);
  const int n = g.vertex_count();
  const int nb = static_cast<int>(blocks.size());

  // Block-cut tree: nodes 0..n-1 are vertices, n..n+nb-1 are blocks.
  std::vector<std::vector<int>> tree(n + nb);
  std::vector<std::vector<char>> in_block(nb, std::vector<char>(n, 0));
  for (int b = 0; b < nb; ++b) {
    for (int e : blocks[b]) {
      for (int x : {gs.edge(e).u, gs.edge(e).v}) {
        if (in_block[b][x]) continue;
        in_block[b][x] = 1;
        tree[x].push_back(n + b);
        tree[n + b].push_back(x);
      }
    }
  }

  struct Piece {
    int a, b;  // vertex indices
    int hole;  // original hole label
    std::int64_t value;
  };
  std::vector<std::vector<Piece>> pieces(nb);

  for (const Demand& d : demands) {
    std::vector<int> prev(n + nb, -1);
    std::queue<int> q;
    q.push(d.s);
    prev[d.s] = d.s;
    while (!q.empty() && prev[d.t] == -1) {
      const int x = q.front();
      q.pop();
      for (int y : tree[x])
        if (prev[y] == -1) {
          prev[y] = x;
          q.push(y);
        }
    }
    TRIHOLE_CHECK(prev[d.t] != -1, "demand endpoints in one component must be tree-connected");
    std::vector<int> nodes;
    for (int x = d.t; x != d.s; x = prev[x]) nodes.push_back(x);
    nodes.push_back(d.s);
    std::reverse(nodes.begin(), nodes.end());
    DemandChain chain;
    chain.value = d.value;
    for (std::size_t k = 0; k < nodes.size(); k += 2) {
      chain.vertices.push_back(g.vertex_label(nodes[k]));
      if (k + 1 < nodes.size()) {
        const int b = nodes[k + 1] - n;
        chain.blocks.push_back(b);
        pieces[b].push_back({nodes[k], nodes[k + 2], d.hole, d.value});
      }
    }
    out.chains.push_back(std::move(chain));
  }

  for (int b = 0; b < nb; ++b) {
    std::vector<int> orig_edges;
    for (int e : blocks[b]) orig_edges.push_back(stripped_to_orig[e]);
    std::vector<int> vmap, emap;
    auto bg = std::make_shared<const EmbeddedGraph>(g.edge_subgraph(orig_edges, &vmap, &emap));
    std::vector<char> in_this(g.edge_count(), 0);
    for (int e : orig_edges) in_this[e] = 1;

    BlockProblem bp;
    bp.bridge = orig_edges.size() == 1;
    Instance& bi = bp.instance;
    bi.graph = bg;
    for (int e : emap) bi.capacity.push_back(inst.capacity[e]);

    // Block face holding the region of hole `label`, seen from vertex a.
    auto block_face = [&](int label, int a) {
      const Hole* h = inst.find_hole(label);
      TRIHOLE_CHECK(h != nullptr, "demand on an unknown hole");
      const int region = regions.find(h->face);
      const auto rot = g.rotation(a);
      const int deg = static_cast<int>(rot.size());
      for (int i = 0; i < deg; ++i) {
        if (regions.find(g.face_of(rot[i])) != region) continue;
        for (int k = 0; k < deg; ++k) {
          const Dart o = rot[(i + k) % deg];
          if (!in_this[edge_of(o)]) continue;
          const int be = std::find(emap.begin(), emap.end(), edge_of(o)) - emap.begin();
          return bg->face_of(dart_of(be, (o & 1) == 0));
        }
      }
      throw_internal("hole region does not touch its demand endpoint");
    };

    std::map<int, int> face_label;  // block face -> smallest hole label on it
    std::vector<Demand> bd;
    for (const Piece& p : pieces[b]) {
      int label = 0;
      if (!bp.bridge) {
        const int f = block_face(p.hole, p.a);
        auto [it, inserted] = face_label.emplace(f, p.hole);
        if (!inserted) it->second = std::min(it->second, p.hole);
        label = f;  // resolved below
      }
      bd.push_back({vmap[p.a], vmap[p.b], label, p.value});
    }
    if (!bp.bridge) {
      for (Demand& d : bd) d.hole = face_label[d.hole];
      for (const auto& [f, label] : face_label) bi.holes.push_back({label, f});
      std::sort(bi.holes.begin(), bi.holes.end(),
                [](const Hole& x, const Hole& y) { return x.label < y.label; });
      bi.outer_face = bi.holes.empty() ? 0 : bi.holes.back().face;
    } else {
      for (Demand& d : bd) d.hole = 0;
    }
    bi.demands = canonical_demands(std::move(bd));

    if (bp.bridge) {
      std::int64_t total = 0;
      for (const Demand& d : bi.demands) total += d.value;
      if (total > bi.capacity[0]) {
        out.feasible = false;
        // X = side of the bridge holding its first endpoint.
        const int e = orig_edges[0];
        const int se = std::find(stripped_to_orig.begin(), stripped_to_orig.end(), e) -
                       stripped_to_orig.begin();
        const int skip[] = {se};
        const EmbeddedGraph cut = gs.without_edges(skip);
        const std::vector<int> side = cut.components();
        const int c = side[g.edge(e).u];
        for (int v = 0; v < n; ++v)
          if (side[v] == c) out.violated.vertices.push_back(g.vertex_label(v));
        out.violated.capacity = bi.capacity[0];
        for (const Demand& x : demands)
          if ((side[x.s] == c) != (side[x.t] == c)) out.violated.demand += x.value;
        out.blocks.clear();
        out.chains.clear();
        return out;
      }
    }
    out.blocks.push_back(std::move(bp));
  }
  return out;
}

Multiflow solve_bridge(const BlockProblem& block) {
  const EmbeddedGraph& g = block.instance.g();
  TRIHOLE_CHECK(block.bridge && g.edge_count() == 1, "not a bridge block");
  Multiflow f;
  for (const Demand& d : block.instance.demands) {
    if (d.value == 0) continue;
    f.paths.push_back({{g.vertex_label(d.s), g.vertex_label(d.t)}, {g.edge_label(0)}, d.value});
  }
  return f;
}

Multiflow glue(const Normalization& norm, const std::vector<Multiflow>& block_flows) {
  TRIHOLE_CHECK(block_flows.size() == norm.blocks.size(), "one flow per block expected");
  std::vector<Multiflow> pool = block_flows;
  Multiflow out;
  for (const DemandChain& ch : norm.chains) {
    Multiflow acc;
    for (std::size_t k = 0; k < ch.blocks.size(); ++k) {
      SubflowSplit s = extract_subflow(pool[ch.blocks[k]], ch.vertices[k], ch.vertices[k + 1],
                                       ch.value);
      pool[ch.blocks[k]] = std::move(s.remainder);
      acc = k == 0 ? std::move(s.subflow) : concatenate_flows(acc, s.subflow);
    }
    out.append(acc);
  }
  for (const Multiflow& rest : pool)
    TRIHOLE_CHECK(rest.paths.empty(), "block flow left unused after gluing");
  return out;
}

}  // namespace trihole
