#pragma once

#include <cstdint>
#include <vector>

#include "trihole/instance.hpp"
#include "trihole/multiflow.hpp"

namespace trihole {

// A violated cut found during normalization: X given by vertex labels.
struct VertexCutCertificate {
  std::vector<std::int64_t> vertices;
  std::int64_t capacity = 0;
  std::int64_t demand = 0;
  std::int64_t excess() const { return capacity - demand; }
};

struct BlockProblem {
  Instance instance;
  bool bridge = false;  // single edge, no holes; feasible iff demand <= capacity
};

// One original demand split at the cut vertices it must pass through.
struct DemandChain {
  std::vector<std::int64_t> vertices;  // labels: s, w1, ..., t
  std::vector<int> blocks;             // blocks[k] carries vertices[k]-vertices[k+1]
  std::int64_t value = 0;
};

struct Normalization {
  bool feasible = true;
  VertexCutCertificate violated;  // set when !feasible
  std::vector<BlockProblem> blocks;
  std::vector<DemandChain> chains;
};

// Strips zero capacities, splits into connected components and then into
// biconnected blocks. Every block with two or more edges has simple-cycle
// faces; its holes are the block faces that contain an original hole carrying
// demand (holes meeting in one block face merge into the smaller label).
Normalization normalize(const Instance& inst);

// Routes a bridge block directly (one path of the full demand).
Multiflow solve_bridge(const BlockProblem& block);

// Assembles a multiflow of the original instance from per-block multiflows.
Multiflow glue(const Normalization& norm, const std::vector<Multiflow>& block_flows);

}  // namespace trihole
