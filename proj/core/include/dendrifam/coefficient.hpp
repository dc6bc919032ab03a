#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dendrifam {

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(long numerator, long denominator);
  explicit Coefficient(mpq_class q);

  /// Accepts `p`, `-p`, `p/q`; non-reduced input is normalized, a zero denominator is rejected.
  static Coefficient parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  /// `p/q`, or `p` when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return q_; }

  Coefficient& operator+=(const Coefficient& o) {
    q_ += o.q_;
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    q_ -= o.q_;
    return *this;
  }
  Coefficient& operator*=(const Coefficient& o) {
    q_ *= o.q_;
    return *this;
  }
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend Coefficient operator-(const Coefficient& a) { return Coefficient(mpq_class(-a.q_)); }

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Coefficient& c);

 private:
  mpq_class q_;
};

/// Scalar addition in canonical form.
inline Coefficient add(const Coefficient& a, const Coefficient& b) { return a + b; }
inline Coefficient mul(const Coefficient& a, const Coefficient& b) { return a * b; }

}  // namespace dendrifam
