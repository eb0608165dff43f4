#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trihole/ext_int.hpp"

namespace trihole {

// Boundary edge pair {e, g} of one hole, by hole label and edge labels.
struct HoleEdgePair {
  int hole = 0;
  std::int64_t e = 0;
  std::int64_t g = 0;
};

struct CutCertificate {
  int type = 0;  // 1, 2 or 3 holes involved
  std::vector<HoleEdgePair> pairs;
  ExtInt value = ExtInt::infinity();
  bool exact = false;  // true for type 1, lower bound otherwise
};

struct TerminalRef {
  int hole = 0;           // label
  std::int64_t edge = 0;  // boundary edge label
};

struct MetricCertificate {
  std::array<int, 3> holes{};                           // labels, cyclic order used
  std::array<std::array<std::int64_t, 4>, 3> quads{};  // edge labels b1..b4 per hole
  ExtInt zeta = ExtInt::infinity();
  std::int64_t demand = 0;
  ExtInt value = ExtInt::infinity();  // zeta - demand
  std::vector<std::pair<TerminalRef, TerminalRef>> matching;  // six terminal pairs
};

struct ExcessReport {
  ExtInt mu1 = ExtInt::infinity();
  ExtInt nu2 = ExtInt::infinity();
  ExtInt nu3 = ExtInt::infinity();
  ExtInt mu_hat = ExtInt::infinity();
  bool metric_computed = false;
  CutCertificate cut1, cut2, cut3;
  MetricCertificate metric;

  ExtInt cut_minimum() const { return min(mu1, min(nu2, nu3)); }
  ExtInt minimum() const { return min(cut_minimum(), mu_hat); }
  bool violated() const { return minimum() < ExtInt(0); }
};

std::string to_text(const CutCertificate& c);
std::string to_text(const MetricCertificate& m);

}  // namespace trihole
