#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace arnold {

/// Reduced fraction p/q with q >= 1, used as a rotation-number label.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  double value() const noexcept {
    return static_cast<double>(p_) / static_cast<double>(q_);
  }

  std::string to_string() const;

  /// Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) noexcept {
    // q > 0 on both sides, so cross multiplication preserves order.
    return lhs.p_ * rhs.q_ <=> rhs.p_ * lhs.q_;
  }

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

}  // namespace arnold
