#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace trihole {

// Integer extended by +infinity. Infinity is a flag, not a large value, so
// finite arithmetic stays exact.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of the domain

  static constexpr ExtInt infinity() {
    ExtInt r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtInt(a.value_ + b.value_);
  }
  friend constexpr ExtInt operator-(ExtInt a, std::int64_t b) {
    if (a.infinite_) return a;
    return ExtInt(a.value_ - b);
  }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
  }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

inline constexpr ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }

}  // namespace trihole
