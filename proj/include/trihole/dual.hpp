#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trihole/ext_int.hpp"
#include "trihole/instance.hpp"

namespace trihole {

// Planar dual with every hole vertex split into one pendant terminal per
// boundary edge. Dual edge e* has the primal index e and length c(e).
struct DualGraph {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> ends;  // per edge: dual vertices on its two sides
  std::vector<std::int64_t> length;      // per edge
  std::vector<std::vector<int>> incident;  // per dual vertex: incident edge indices
  std::vector<int> face_vertex;            // per primal face, -1 for holes
  std::vector<BoundaryCycle> boundaries;   // per hole, in Instance::holes order
  // terminals[h][k]: dual vertex of the terminal for boundary position k.
  std::vector<std::vector<int>> terminals;

  int hole_count() const { return static_cast<int>(terminals.size()); }
  int other_end(int e, int x) const { return ends[e][0] == x ? ends[e][1] : ends[e][0]; }
};

// Requires every hole boundary to be a closed walk with distinct edges.
DualGraph build_dual(const Instance& inst);

// Distances from every terminal to every dual vertex.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(const DualGraph& dual, int threads = 1);
  // Keeps a pointer to the dual for path queries.
  DistanceTable(DualGraph&&, int = 1) = delete;

  // Terminal at boundary position p of hole index h to dual vertex x.
  ExtInt to_vertex(int h, int p, int x) const;
  ExtInt between(int h, int p, int h2, int p2) const;
  // Edge used to reach x on a shortest path from the terminal, or -1.
  int pred_edge(int h, int p, int x) const;
  // Terminal-to-terminal path as dual edge indices, empty if unreachable.
  std::vector<int> path(int h, int p, int h2, int p2) const;

  int hole_count() const { return static_cast<int>(offset_.size()); }
  int boundary_size(int h) const { return size_[h]; }

 private:
  int index(int h, int p) const { return offset_[h] + p; }

  const DualGraph* dual_ = nullptr;
  std::vector<int> offset_;
  std::vector<int> size_;
  std::vector<std::vector<ExtInt>> dist_;
  std::vector<std::vector<int>> pred_;
};

}  // namespace trihole
