#pragma once

#include <cstdint>
#include <vector>

#include "trihole/dual.hpp"
#include "trihole/excess.hpp"
#include "trihole/instance.hpp"

namespace trihole {

// d(D_i(a, b)) for boundary edge positions a, b of one hole: total demand of
// pairs on that hole separated by removing the two edges.
class SeparatedDemandTable {
 public:
  SeparatedDemandTable() = default;
  SeparatedDemandTable(const Instance& inst, const BoundaryCycle& cycle);

  std::int64_t operator()(int a, int b) const { return table_[a * size_ + b]; }
  int size() const { return size_; }

 private:
  int size_ = 0;
  std::vector<std::int64_t> table_;
};

// Tables for every hole of the instance, in Instance::holes order.
std::vector<SeparatedDemandTable> separated_demand_tables(const Instance& inst,
                                                          const DualGraph& dual);

// d(D_i(e, g)) for edge indices e, g on the boundary of hole `label`.
std::int64_t separated_demand(const Instance& inst, int label, int e, int g);

CutCertificate mu1(const Instance& inst, const DualGraph& dual, const DistanceTable& dist,
                   const std::vector<SeparatedDemandTable>& sep);
CutCertificate nu2(const Instance& inst, const DualGraph& dual, const DistanceTable& dist,
                   const std::vector<SeparatedDemandTable>& sep);
CutCertificate nu3(const Instance& inst, const DualGraph& dual, const DistanceTable& dist,
                   const std::vector<SeparatedDemandTable>& sep);

// mu1, nu2 (two or more holes) and nu3 (three holes).
ExcessReport min_cut_excess(const Instance& inst);

}  // namespace trihole
