#include "arnold/rational.hpp"

#include <charconv>
#include <numeric>

#include "arnold/errors.hpp"

namespace arnold {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw PreconditionError("not a rational: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw PreconditionError("rational with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

std::string Rational::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text, text), 1};
  return {parse_int(text.substr(0, slash), text),
          parse_int(text.substr(slash + 1), text)};
}

}  // namespace arnold
