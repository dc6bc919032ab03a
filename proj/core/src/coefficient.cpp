#include "dendrifam/coefficient.hpp"

#include <cctype>
#include <ostream>

#include "dendrifam/errors.hpp"

namespace dendrifam {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Coefficient::Coefficient(long numerator, long denominator) : q_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Coefficient::Coefficient(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Coefficient Coefficient::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Coefficient(mpq_class(n, d));
}

std::string Coefficient::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw std::domain_error("division by zero coefficient");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.str(); }

}  // namespace dendrifam
