#pragma once

#include <cstdint>
#include <string>

#include "trihole/instance.hpp"

namespace trihole {

enum class GenTarget { kAny, kSolvable, kCutTight, kMetricViolating };

GenTarget parse_target(const std::string& s);
std::string to_string(GenTarget t);

struct GenParams {
  std::uint64_t seed = 1;
  int n = 8;           // vertices
  int outer_size = 4;  // length of the outer hole boundary
  int hole_max = 5;    // preferred max boundary length of the bounded holes
  int demands = 3;     // demand pairs drawn
  std::int64_t cmax = 3;
  std::int64_t dmax = 3;
  int chords = -1;  // extra chords after the vertices are placed, -1 for n / 2
  GenTarget target = GenTarget::kAny;
  int retries = 2000;  // attempts for targets checked by the oracle
};

// Random 2-connected plane graph grown by ears inside an outer cycle, three
// holes (outer plus two bounded faces), Eulerian capacities and demands.
// kSolvable and kCutTight route every demand along a random path and size
// capacities from the loads, so the result is solvable by construction.
// kMetricViolating retries until the oracle sees every cut satisfied and some
// (2,3)-metric violated; n <= 10 only. Throws Error(kResourceCap) when the
// retry budget runs out.
Instance generate(const GenParams& p);

}  // namespace trihole
