#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trihole/cut_checker.hpp"
#include "trihole/dual.hpp"
#include "trihole/excess.hpp"
#include "trihole/instance.hpp"

namespace trihole {

// Per hole (Instance::holes order) four boundary positions b1..b4 in cyclic
// boundary order; consecutive entries may coincide.
struct QuadrupleTriple {
  std::array<std::array<int, 4>, 3> pos{};
};

// True when b1..b4 go around the boundary of length L at most once.
bool quadruple_in_order(const std::array<int, 4>& b, int L);

// Demand term of one hole: pairs joining neighboring segments count once,
// pairs joining opposite segments twice.
std::int64_t quad_demand(const SeparatedDemandTable& sep, const std::array<int, 4>& b);

struct ZetaResult {
  ExtInt value = ExtInt::infinity();
  // Six terminal pairs as ((hole index, position), (hole index, position)).
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> matching;
};

// Minimum six-path system: per hole two of the four terminals lead to the next
// hole and two to the previous one, two paths per hole pair.
ZetaResult zeta(const DistanceTable& dist, const QuadrupleTriple& q);

ExtInt excess_tilde(const DistanceTable& dist, const std::vector<SeparatedDemandTable>& sep,
                    const QuadrupleTriple& q);

struct MetricOptions {
  int max_quad = 0;  // cap on boundary length per hole, 0 for none
  int threads = 1;
};

// Minimum of excess_tilde over all quadruple triples, by a cyclic min-plus
// recursion over the per-hole terminal pairs. Requires three holes.
MetricCertificate mu_hat(const Instance& inst, const DualGraph& dual, const DistanceTable& dist,
                         const std::vector<SeparatedDemandTable>& sep,
                         const MetricOptions& opt = {});

// Same minimum by scanning every quadruple triple with full zeta; small
// boundaries only.
ExtInt mu_hat_scan(const DistanceTable& dist, const std::vector<SeparatedDemandTable>& sep);

struct CheckOptions {
  bool skip_metric = false;
  MetricOptions metric;
};

// Cut terms plus, with three holes, the metric term.
ExcessReport check_excess(const Instance& inst, const CheckOptions& opt = {});

}  // namespace trihole
