#include "trihole/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "trihole/error.hpp"

namespace trihole {

EmbeddedGraph EmbeddedGraph::build(int vertex_count, std::vector<EdgeEnds> edges,
                                   std::vector<std::vector<Dart>> rotation,
                                   std::vector<std::int64_t> vertex_labels,
                                   std::vector<std::int64_t> edge_labels,
                                   bool require_connected) {
  if (vertex_count <= 0) throw_invalid("graph needs at least one vertex");
  if (static_cast<int>(rotation.size()) != vertex_count)
    throw_invalid("rotation list count differs from vertex count");
  if (vertex_labels.empty()) {
    vertex_labels.resize(vertex_count);
    std::iota(vertex_labels.begin(), vertex_labels.end(), 0);
  }
  if (edge_labels.empty()) {
    edge_labels.resize(edges.size());
    std::iota(edge_labels.begin(), edge_labels.end(), 0);
  }
  if (static_cast<int>(vertex_labels.size()) != vertex_count ||
      edge_labels.size() != edges.size())
    throw_invalid("label vectors have the wrong size");

  EmbeddedGraph g;
  g.edges_ = std::move(edges);
  g.rotation_ = std::move(rotation);
  g.vertex_labels_ = std::move(vertex_labels);
  g.edge_labels_ = std::move(edge_labels);

  const int m = g.edge_count();
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = g.edges_[e];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw_invalid("edge " + std::to_string(g.edge_labels_[e]) +
                    " has an endpoint out of range");
    if (u == v)
      throw_invalid("edge " + std::to_string(g.edge_labels_[e]) +
                    " is a self-loop");
  }

  g.rot_pos_.assign(2 * m, -1);
  for (int v = 0; v < vertex_count; ++v) {
    const auto& rot = g.rotation_[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      const Dart d = rot[i];
      if (d < 0 || d >= 2 * m)
        throw_invalid("rotation at vertex " + std::to_string(g.vertex_labels_[v]) +
                      " names an unknown edge-end");
      if (g.tail(d) != v)
        throw_invalid("rotation at vertex " + std::to_string(g.vertex_labels_[v]) +
                      " lists edge " + std::to_string(g.edge_labels_[edge_of(d)]) +
                      " which is not incident to it");
      if (g.rot_pos_[d] != -1)
        throw_invalid("edge-end of edge " + std::to_string(g.edge_labels_[edge_of(d)]) +
                      " appears twice in the rotations");
      g.rot_pos_[d] = i;
    }
  }
  for (Dart d = 0; d < 2 * m; ++d)
    if (g.rot_pos_[d] == -1)
      throw_invalid("edge " + std::to_string(g.edge_labels_[edge_of(d)]) +
                    " missing from the rotation at vertex " +
                    std::to_string(g.vertex_labels_[g.tail(d)]));

  g.trace_faces();

  int comp_count = 0;
  const std::vector<int> comp = g.components(&comp_count);
  if (require_connected && comp_count != 1) throw_invalid("graph is disconnected");

  // Euler relation per component that has edges.
  std::vector<int> nv(comp_count, 0), ne(comp_count, 0), nf(comp_count, 0);
  for (int v = 0; v < vertex_count; ++v) ++nv[comp[v]];
  for (int e = 0; e < m; ++e) ++ne[comp[g.edges_[e].u]];
  for (int f = 0; f < g.face_count(); ++f) ++nf[comp[g.tail(g.faces_[f].front())]];
  for (int c = 0; c < comp_count; ++c) {
    if (ne[c] == 0) continue;
    if (nv[c] - ne[c] + nf[c] != 2)
      throw_invalid("Euler relation violated (V - E + F = " +
                    std::to_string(nv[c] - ne[c] + nf[c]) +
                    "): rotation system is not planar");
  }
  if (require_connected && m == 0 && vertex_count > 1)
    throw_invalid("graph is disconnected");
  return g;
}

void EmbeddedGraph::trace_faces() {
  const int darts = dart_count();
  face_next_.assign(darts, -1);
  for (Dart d = 0; d < darts; ++d) {
    const Dart r = reverse(d);
    const auto& rot = rotation_[tail(r)];
    const int pos = rot_pos_[r];
    face_next_[d] = rot[(pos + 1) % rot.size()];
  }
  face_of_.assign(darts, -1);
  faces_.clear();
  for (Dart d = 0; d < darts; ++d) {
    if (face_of_[d] != -1) continue;
    const int f = face_count();
    faces_.emplace_back();
    Dart x = d;
    do {
      face_of_[x] = f;
      faces_.back().push_back(x);
      x = face_next_[x];
    } while (x != d);
  }
}

std::optional<int> EmbeddedGraph::find_vertex(std::int64_t label) const {
  auto it = std::find(vertex_labels_.begin(), vertex_labels_.end(), label);
  if (it == vertex_labels_.end()) return std::nullopt;
  return static_cast<int>(it - vertex_labels_.begin());
}

std::optional<int> EmbeddedGraph::find_edge(std::int64_t label) const {
  auto it = std::find(edge_labels_.begin(), edge_labels_.end(), label);
  if (it == edge_labels_.end()) return std::nullopt;
  return static_cast<int>(it - edge_labels_.begin());
}

std::vector<int> EmbeddedGraph::components(int* count) const {
  const int n = vertex_count();
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (Dart d : rotation_[v]) {
        const int w = head(d);
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

EmbeddedGraph EmbeddedGraph::without_edges(std::span<const int> edges) const {
  std::vector<char> drop(edge_count(), 0);
  for (int e : edges) drop[e] = 1;
  std::vector<int> keep;
  for (int e = 0; e < edge_count(); ++e)
    if (!drop[e]) keep.push_back(e);

  std::vector<int> new_index(edge_count(), -1);
  std::vector<EdgeEnds> ne;
  std::vector<std::int64_t> el;
  for (int e : keep) {
    new_index[e] = static_cast<int>(ne.size());
    ne.push_back(edges_[e]);
    el.push_back(edge_labels_[e]);
  }
  std::vector<std::vector<Dart>> rot(vertex_count());
  for (int v = 0; v < vertex_count(); ++v)
    for (Dart d : rotation_[v])
      if (!drop[edge_of(d)]) rot[v].push_back(dart_of(new_index[edge_of(d)], (d & 1) == 0));
  return build(vertex_count(), std::move(ne), std::move(rot), vertex_labels_,
               std::move(el), /*require_connected=*/false);
}

EmbeddedGraph EmbeddedGraph::edge_subgraph(std::span<const int> edges,
                                           std::vector<int>* vertex_map,
                                           std::vector<int>* edge_map) const {
  std::vector<int> vmap(vertex_count(), -1);
  std::vector<int> emap(edge_count(), -1);
  std::vector<std::int64_t> vl, el;
  std::vector<EdgeEnds> ne;
  std::vector<int> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  for (int e : sorted) {
    for (int x : {edges_[e].u, edges_[e].v}) {
      if (vmap[x] == -1) {
        vmap[x] = static_cast<int>(vl.size());
        vl.push_back(vertex_labels_[x]);
      }
    }
    emap[e] = static_cast<int>(ne.size());
    ne.push_back({vmap[edges_[e].u], vmap[edges_[e].v]});
    el.push_back(edge_labels_[e]);
  }
  std::vector<std::vector<Dart>> rot(vl.size());
  for (int v = 0; v < vertex_count(); ++v) {
    if (vmap[v] == -1) continue;
    for (Dart d : rotation_[v])
      if (emap[edge_of(d)] != -1)
        rot[vmap[v]].push_back(dart_of(emap[edge_of(d)], (d & 1) == 0));
  }
  if (vertex_map) *vertex_map = vmap;
  if (edge_map) {
    edge_map->assign(ne.size(), -1);
    for (int e = 0; e < edge_count(); ++e)
      if (emap[e] != -1) (*edge_map)[emap[e]] = e;
  }
  const int n = static_cast<int>(vl.size());
  return build(n, std::move(ne), std::move(rot), std::move(vl), std::move(el),
               /*require_connected=*/false);
}

}  // namespace trihole
