#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace trihole {

// A dart is a directed edge-end: dart 2e goes u->v of edge e, dart 2e+1 goes
// v->u.
using Dart = int;

inline constexpr int edge_of(Dart d) { return d >> 1; }
inline constexpr Dart reverse(Dart d) { return d ^ 1; }
inline constexpr Dart dart_of(int edge, bool forward) {
  return 2 * edge + (forward ? 0 : 1);
}

struct EdgeEnds {
  int u = 0;
  int v = 0;
};

// Connected or not, plane multigraph given by a rotation system. Rotations
// are clockwise lists of outgoing darts. Faces are the orbits of
//   next(a->b) = clockwise successor of (b->a) in the rotation at b,
// numbered by their smallest dart. Vertices and edges carry external labels
// that survive sub-graph extraction.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  // Validates and traces faces. Throws Error(kInvalidInput) on inconsistent
  // rotations, self-loops, disconnection (when required) or a violated Euler
  // relation.
  static EmbeddedGraph build(int vertex_count, std::vector<EdgeEnds> edges,
                             std::vector<std::vector<Dart>> rotation,
                             std::vector<std::int64_t> vertex_labels,
                             std::vector<std::int64_t> edge_labels,
                             bool require_connected = true);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const EdgeEnds& edge(int e) const { return edges_[e]; }
  int tail(Dart d) const { return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u; }
  int head(Dart d) const { return tail(reverse(d)); }

  std::span<const Dart> rotation(int v) const { return rotation_[v]; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

  Dart next_in_face(Dart d) const { return face_next_[d]; }
  int face_of(Dart d) const { return face_of_[d]; }
  std::span<const Dart> face(int f) const { return faces_[f]; }
  // Face on each side of edge e: {face of its forward dart, face of reverse}.
  std::pair<int, int> faces_of_edge(int e) const {
    return {face_of_[2 * e], face_of_[2 * e + 1]};
  }

  std::int64_t vertex_label(int v) const { return vertex_labels_[v]; }
  std::int64_t edge_label(int e) const { return edge_labels_[e]; }
  std::optional<int> find_vertex(std::int64_t label) const;
  std::optional<int> find_edge(std::int64_t label) const;

  // Connected component id per vertex (isolated vertices get their own).
  std::vector<int> components(int* count = nullptr) const;

  // Same vertex set, given edges removed; remaining rotations keep their
  // relative order. Result may be disconnected.
  EmbeddedGraph without_edges(std::span<const int> edges) const;

  // Sub-graph on the given edges with vertices compacted to those touched;
  // `vertex_map` (optional) receives old->new vertex index or -1,
  // `edge_map` receives new->old edge index.
  EmbeddedGraph edge_subgraph(std::span<const int> edges,
                              std::vector<int>* vertex_map,
                              std::vector<int>* edge_map) const;

 private:
  void trace_faces();

  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::int64_t> vertex_labels_;
  std::vector<std::int64_t> edge_labels_;
  std::vector<int> rot_pos_;  // position of each dart in its tail's rotation
  std::vector<Dart> face_next_;
  std::vector<int> face_of_;
  std::vector<std::vector<Dart>> faces_;
};

}  // namespace trihole
