#include "lieext/rational.hpp"

#include <ostream>

#include "lieext/errors.hpp"

namespace lieext {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NonRationalSpectrum: return "NonRationalSpectrum";
    case ErrorCode::NotUnity: return "NotUnity";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::NotCommonEigenvector: return "NotCommonEigenvector";
    case ErrorCode::DegenerateCase: return "DegenerateCase";
    case ErrorCode::NotACasimir: return "NotACasimir";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::InvalidLiePreset: return "InvalidLiePreset";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::Singular, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::Singular, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::Singular, "division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::Parse, "invalid rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lieext
