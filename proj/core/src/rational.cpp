#include "binmms/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace binmms {

namespace {

mpz_class toMpz(std::int64_t v) {
  // mpz_class(long) is 64-bit on LP64; keep the conversion explicit.
  return mpz_class(static_cast<long>(v));
}

std::int64_t toInt64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("rational component exceeds int64");
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(toMpz(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(toMpz(numerator), toMpz(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto digits = [&](std::string_view s) {
    if (s.starts_with('-') || s.starts_with('+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den.starts_with('-') || den.starts_with('+'))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num.starts_with('+') ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

std::string Rational::numeratorString() const { return value_.get_num().get_str(); }
std::string Rational::denominatorString() const { return value_.get_den().get_str(); }
std::int64_t Rational::numerator() const { return toInt64(value_.get_num()); }
std::int64_t Rational::denominator() const { return toInt64(value_.get_den()); }
bool Rational::fitsInt64() const {
  return value_.get_num().fits_slong_p() && value_.get_den().fits_slong_p();
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::toDouble() const { return value_.get_d(); }

std::int64_t Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return toInt64(q);
}

std::int64_t Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return toInt64(q);
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  if (other.isZero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational operator-(const Rational& value) { return Rational(mpq_class(-value.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace binmms
