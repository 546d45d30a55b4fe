#pragma once

// Exact rational numbers on checked 64-bit integers.
//
// Every quantity in this library (root coordinates, pairings, matrix
// entries, cone rays) is small, so a fixed-width representation is
// enough. Overflow is never silent: any operation that would leave the
// int64 range throws std::overflow_error.

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sphroots {

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: multiplication overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("rational: subtraction overflow");
  return r;
}

}  // namespace detail

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const { return Rational(detail::checked_sub(0, num_), den_, raw_tag{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(detail::checked_add(a.num_, b.num_), a.den_);
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t ad = a.den_ / g;
    const std::int64_t bd = b.den_ / g;
    return Rational(detail::checked_add(detail::checked_mul(a.num_, bd), detail::checked_mul(b.num_, ad)),
                    detail::checked_mul(a.den_, bd));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    // cross-reduce first to keep intermediates small
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t n1 = g1 ? a.num_ / g1 : a.num_;
    const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
    const std::int64_t n2 = g2 ? b.num_ / g2 : b.num_;
    const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
    return Rational(detail::checked_mul(n1, n2), detail::checked_mul(d1, d2), raw_tag{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational: division by zero");
    return a * b.reciprocal();
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("rational: reciprocal of zero");
    return num_ < 0 ? Rational(-den_, -num_, raw_tag{}) : Rational(den_, num_, raw_tag{});
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // den > 0 always
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  // "n" for integers, "n/d" otherwise.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  // Always "n/d", the wire format for exact numbers.
  std::string fraction() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  static Rational parse(std::string_view text);

  std::size_t hash() const {
    return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
  }

 private:
  struct raw_tag {};
  Rational(std::int64_t n, std::int64_t d, raw_tag) : num_(n), den_(d) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational: zero denominator");
    if (den_ < 0) {
      num_ = detail::checked_sub(0, num_);
      den_ = detail::checked_sub(0, den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("rational: empty integer");
    std::size_t pos = 0;
    const long long v = std::stoll(std::string(s), &pos);
    if (pos != s.size()) throw std::invalid_argument("rational: trailing characters in '" + std::string(s) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

using Vec = std::vector<Rational>;

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = v.size();
    for (const auto& x : v) h = h * 31 + x.hash();
    return h;
  }
};

// p-adic unit test: true iff the denominator is a power of p (p = 1 means
// the denominator must be 1).
inline bool has_p_power_denominator(const Rational& x, std::int64_t p) {
  std::int64_t d = x.den();
  if (p <= 1) return d == 1;
  while (d % p == 0) d /= p;
  return d == 1;
}

}  // namespace sphroots
