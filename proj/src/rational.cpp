#include "horadyn/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "horadyn/error.hpp"

namespace horadyn {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonRealRoots: return "NonRealRoots";
    case ErrorCode::SpecNotCanonical: return "SpecNotCanonical";
    case ErrorCode::IndexConstraintViolated: return "IndexConstraintViolated";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ForbiddenInitialCondition: return "ForbiddenInitialCondition";
    case ErrorCode::InitialAtMinusPhiPlus: return "InitialAtMinusPhiPlus";
    case ErrorCode::Singularity: return "Singularity";
    case ErrorCode::NearSingularity: return "NearSingularity";
    case ErrorCode::WrongBranch: return "WrongBranch";
    case ErrorCode::NotAnEquilibrium: return "NotAnEquilibrium";
    case ErrorCode::OrbitTooShort: return "OrbitTooShort";
  }
  return "Unknown";
}

Rational pow(const Rational& base, unsigned long exp) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  // Powers of a reduced fraction stay reduced.
  return Rational(num, den);
}

Rational pow(const Rational& base, long exp) {
  if (exp >= 0) return pow(base, static_cast<unsigned long>(exp));
  if (base == 0) throw Error(ErrorCode::ZeroDenominator, "zero raised to a negative power");
  Rational inv = 1 / base;
  inv.canonicalize();
  return pow(inv, static_cast<unsigned long>(-exp));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::InvalidArgument, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view n = body.substr(0, slash);
    std::string_view d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) bad(text);
    mpz_class num(std::string(n), 10);
    mpz_class den(std::string(d), 10);
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
    result = Rational(num, den);
    result.canonicalize();
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string exp_text(body.substr(e + 1));
      std::string_view digits = exp_text;
      if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
      if (!all_digits(digits) || digits.size() > 6) bad(text);
      exponent = std::strtol(exp_text.c_str(), nullptr, 10);
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad(text);
    if (!int_part.empty() && !all_digits(int_part)) bad(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    result = Rational(num) * pow(Rational(10), exponent);
    result.canonicalize();
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) {
  if (value == 0) return 0.0;
  const long num_bits = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 2));
  if (num_bits - den_bits > 1026)
    return sign(value) > 0 ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
  if (num_bits - den_bits < -1080) return sign(value) > 0 ? 0.0 : -0.0;
  return value.get_d();
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "non-finite value has no rational form");
  Rational r(value);
  r.canonicalize();
  return r;
}

int sign(const Rational& value) { return sgn(value); }

}  // namespace horadyn
