#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trihole/ext_int.hpp"
#include "trihole/instance.hpp"

namespace trihole {

enum class SetFilter { kAll, kRegular, kRegularType, kSemiRegular };

struct OracleLimits {
  int cut_bound = 12;     // max |V| for subset enumeration
  int metric_bound = 10;  // max |V| for assignment enumeration
};

struct RegularityInfo {
  bool connected = false;         // [X] connected
  bool simply_connected = false;  // region of X simply connected
  bool segments = false;          // [X] meets every hole boundary in a segment
  int type = 0;                   // holes met properly
  std::vector<int> holes_met;     // labels of those holes
  bool regular() const { return simply_connected && segments; }
};

RegularityInfo is_regular(const Instance& inst, const std::vector<char>& in_x);

// Union of [X] and the faces bounded entirely inside [X] is simply connected.
bool region_simply_connected(const Instance& inst, const std::vector<char>& in_x);
// [X] meets the boundary of hole `label` in a (possibly empty) segment.
bool meets_in_segment(const Instance& inst, int label, const std::vector<char>& in_x);

struct SubsetResult {
  ExtInt value = ExtInt::infinity();
  std::vector<char> x;  // minimizer membership, empty if none
  std::int64_t capacity = 0;
  std::int64_t demand = 0;
};

std::int64_t cut_capacity(const Instance& inst, const std::vector<char>& in_x);
std::int64_t cut_demand(const Instance& inst, const std::vector<char>& in_x);

// Minimum of c(delta(X)) - d(rho(X)) over nonempty proper X passing the filter.
SubsetResult oracle_cut_min(const Instance& inst, SetFilter filter, int type = 0,
                            const OracleLimits& lim = {});

// Every regular set with its type and excess; for decomposition checks.
struct RegularSet {
  std::vector<char> x;
  std::vector<int> holes_met;
  std::int64_t excess = 0;
};
std::vector<RegularSet> oracle_regular_sets(const Instance& inst, const OracleLimits& lim = {});

// Vertex images in K_{2,3}: 0 = t1, 1 = t2, 2 + i = s_{i+1}.
enum class MetricFilter { kAll, kSemiRegular, kRegular };

struct SigmaResult {
  ExtInt value = ExtInt::infinity();
  std::vector<int> sigma;
  std::int64_t capacity = 0;
  std::int64_t demand = 0;
};

int k23_distance(int a, int b);
std::int64_t metric_capacity(const Instance& inst, const std::vector<int>& sigma);
std::int64_t metric_demand(const Instance& inst, const std::vector<int>& sigma);
bool is_semi_regular(const Instance& inst, const std::vector<int>& sigma);
bool is_regular_metric(const Instance& inst, const std::vector<int>& sigma);

SigmaResult oracle_metric_min(const Instance& inst, MetricFilter filter,
                              const OracleLimits& lim = {});

// Every regular metric (sigma) of the instance; small instances only.
std::vector<std::vector<int>> oracle_regular_metrics(const Instance& inst,
                                                     const OracleLimits& lim = {});

bool oracle_solvable(const Instance& inst, const OracleLimits& lim = {});

// Largest eps in [0, min(c(e), d(ab))] for which the reduced problem stays
// solvable; asserts that feasibility is a prefix of that range.
std::int64_t oracle_max_eps(const Instance& inst, int label, int e, int a, int b,
                            const OracleLimits& lim = {});

}  // namespace trihole
