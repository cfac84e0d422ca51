#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sl1 {

// Natural number extended with infinity. Used by |h| >= n atoms, segment
// truncation bounds and oracle depth limits.
class NatInf {
 public:
  constexpr NatInf() : v_(0) {}
  constexpr NatInf(std::uint64_t v) : v_(v) {}  // NOLINT: implicit by design

  static constexpr NatInf inf() { return NatInf(kInf, Tag{}); }

  constexpr bool is_inf() const { return v_ == kInf; }

  std::uint64_t value() const {
    if (is_inf()) throw std::logic_error("NatInf: value() on infinity");
    return v_;
  }

  friend constexpr bool operator==(NatInf a, NatInf b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(NatInf a, NatInf b) { return a.v_ != b.v_; }
  // Infinity compares greater than every finite value.
  friend constexpr bool operator<(NatInf a, NatInf b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(NatInf a, NatInf b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(NatInf a, NatInf b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(NatInf a, NatInf b) { return a.v_ >= b.v_; }

  std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

 private:
  struct Tag {};
  constexpr NatInf(std::uint64_t v, Tag) : v_(v) {}
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_;
};

}  // namespace sl1
