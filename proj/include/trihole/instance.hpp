#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trihole/graph.hpp"

namespace trihole {

// Demand between vertices s and t located on the hole with the given label.
struct Demand {
  int s = 0;
  int t = 0;
  int hole = 0;
  std::int64_t value = 0;

  friend bool operator==(const Demand&, const Demand&) = default;
};

struct Hole {
  int label = 0;  // 1, 2 or 3
  int face = 0;
};

// A demand problem: embedded graph, up to three holes, capacities per edge
// index and demands. Top-level instances carry exactly three holes with hole 3
// on the outer face; instances derived inside the solver may carry fewer.
struct Instance {
  std::shared_ptr<const EmbeddedGraph> graph;
  std::vector<Hole> holes;  // sorted by label
  int outer_face = 0;
  std::vector<std::int64_t> capacity;
  std::vector<Demand> demands;

  const EmbeddedGraph& g() const { return *graph; }
  const Hole* find_hole(int label) const;
  // Index into `holes` of the hole on face f, or -1.
  int hole_index_of_face(int face) const;
};

// Cyclic (vertex, edge) sequence of a hole boundary in face-orbit order:
// edges[k] joins vertices[k] and vertices[(k+1) % size].
struct BoundaryCycle {
  int hole = 0;
  int face = 0;
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> edge_position;    // per edge index, -1 if not on the cycle
  std::vector<int> vertex_position;  // per vertex, -1 if absent or repeated
  std::vector<char> on_boundary;     // per vertex

  int size() const { return static_cast<int>(edges.size()); }
};

// Throws Error(kInvalidInput) if the boundary passes some edge twice.
BoundaryCycle hole_boundary(const Instance& inst, int hole_label);

struct ValidationReport {
  bool eulerian = true;
  std::vector<int> odd_vertices;      // vertex indices with odd c(delta) - d(rho)
  std::vector<std::string> problems;  // structural violations, one line each

  bool valid() const { return problems.empty(); }
  std::string to_text(const Instance& inst) const;
};

// Checks the three-hole contract: distinct holes, hole 3 on the outer face,
// nonnegative data, demand endpoints on their hole boundary, parity.
ValidationReport validate_instance(const Instance& inst);

// c(delta(v)) - d(rho(v)) parity, per vertex.
std::vector<int> odd_parity_vertices(const Instance& inst);
bool is_eulerian(const Instance& inst);

// Drops zero demands and s == t pairs and merges pairs with equal
// (hole, {s,t}); result sorted by (hole, min endpoint, max endpoint).
std::vector<Demand> canonical_demands(std::vector<Demand> demands);

enum class TopologyEventKind { kHolesMerged, kHoleGrew, kInterior };

struct TopologyEvent {
  TopologyEventKind kind = TopologyEventKind::kInterior;
  int hole_a = 0;  // surviving label for merges
  int hole_b = 0;
};

std::string to_string(const TopologyEvent& ev);

struct EdgeDeletion {
  Instance instance;
  TopologyEvent event;
};

// Deletes edge index e with zero capacity; holes on merged faces are merged
// into the smaller label and their demands relabeled. Refuses positive
// capacity. The result may have cut vertices; run normalization afterwards.
EdgeDeletion delete_edge(const Instance& inst, int e);

}  // namespace trihole
