#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "trihole/dual.hpp"

namespace trihole::detail {

// Raw sentinel for hot loops; always tested before any arithmetic.
inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  return (a == kInf || b == kInf) ? kInf : a + b;
}

inline ExtInt to_ext(std::int64_t v) { return v == kInf ? ExtInt::infinity() : ExtInt(v); }

// Dense terminal-to-terminal distances.
class TerminalMatrix {
 public:
  explicit TerminalMatrix(const DistanceTable& dt) {
    for (int h = 0; h < dt.hole_count(); ++h) {
      offset_.push_back(total_);
      total_ += dt.boundary_size(h);
    }
    d_.assign(static_cast<std::size_t>(total_) * total_, kInf);
    for (int h = 0; h < dt.hole_count(); ++h)
      for (int p = 0; p < dt.boundary_size(h); ++p)
        for (int h2 = 0; h2 < dt.hole_count(); ++h2)
          for (int p2 = 0; p2 < dt.boundary_size(h2); ++p2) {
            const ExtInt v = dt.between(h, p, h2, p2);
            if (v.is_finite()) d_[idx(h, p) * total_ + idx(h2, p2)] = v.value();
          }
  }

  std::int64_t operator()(int h, int p, int h2, int p2) const {
    return d_[static_cast<std::size_t>(idx(h, p)) * total_ + idx(h2, p2)];
  }
  // Row pointer for terminal (h, p), indexed by the offset of hole h2 plus position.
  const std::int64_t* row(int h, int p, int h2) const {
    return d_.data() + static_cast<std::size_t>(idx(h, p)) * total_ + offset_[h2];
  }

 private:
  int idx(int h, int p) const { return offset_[h] + p; }
  std::vector<int> offset_;
  int total_ = 0;
  std::vector<std::int64_t> d_;
};

}  // namespace trihole::detail
