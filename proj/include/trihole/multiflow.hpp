#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trihole/instance.hpp"

namespace trihole {

// A path with a positive integer weight. Vertices and edges are stored by
// their external labels so flows survive sub-instance extraction.
// edges[k] joins vertices[k] and vertices[k+1].
struct FlowPath {
  std::vector<std::int64_t> vertices;
  std::vector<std::int64_t> edges;
  std::int64_t weight = 0;

  std::int64_t first() const { return vertices.front(); }
  std::int64_t last() const { return vertices.back(); }
  FlowPath reversed() const;
};

struct Multiflow {
  std::vector<FlowPath> paths;

  std::int64_t total_weight() const;
  void append(const Multiflow& other);
};

struct EdgeLoad {
  int edge = 0;  // edge index
  std::int64_t load = 0;
  std::int64_t capacity = 0;
};

struct PairRouting {
  std::int64_t s = 0;  // labels, s < t
  std::int64_t t = 0;
  std::int64_t demand = 0;
  std::int64_t routed = 0;
};

struct AdmissibilityReport {
  std::vector<EdgeLoad> edges;
  std::vector<PairRouting> pairs;  // demands aggregated by endpoint pair
  std::vector<std::string> violations;

  bool admissible() const { return violations.empty(); }
  std::string to_text(const Instance& inst) const;
};

// Exact verification of the capacity constraints on every edge and demand
// realization (equality) for every demand pair, plus path well-formedness.
AdmissibilityReport check_admissible(const Instance& inst, const Multiflow& flow);

struct SubflowSplit {
  Multiflow subflow;    // exactly `amount` weight of a-b paths, oriented a -> b
  Multiflow remainder;  // everything else
};

// Takes `amount` units of weight from paths with endpoints {a, b}; a path may
// be split in two copies. Throws Error(kInternal) on shortfall.
SubflowSplit extract_subflow(const Multiflow& flow, std::int64_t a, std::int64_t b,
                             std::int64_t amount);

// Removes closed sub-walks so every path is simple; weights are unchanged.
FlowPath simplify_path(const FlowPath& p);

// Joins a -> x paths with x -> b paths weight-wise (both inputs must have the
// same total weight), producing simplified a -> b paths.
Multiflow concatenate_flows(const Multiflow& first, const Multiflow& second);

// Merges identical paths and orders them canonically.
Multiflow canonical_multiflow(const Multiflow& flow);

}  // namespace trihole
