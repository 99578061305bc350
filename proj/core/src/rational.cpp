#include "entropic/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "entropic/error.hpp"

namespace entropic {

namespace {

Integer pow10(long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty number");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
      throw ParseError("malformed rational '" + s + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    Rational r{Integer(num, 10), Integer(den, 10)};
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }

  bool negative = false;
  std::string_view rest = s;
  if (rest[0] == '-' || rest[0] == '+') {
    negative = rest[0] == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = rest.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
      exp_negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw ParseError("malformed exponent in '" + s + "'");
    }
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    rest = rest.substr(0, e);
  }
  std::string digits;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = rest.substr(0, dot);
    std::string_view frac_part = rest.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw ParseError("malformed decimal '" + s + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(rest)) throw ParseError("malformed number '" + s + "'");
    digits = std::string(rest);
  }
  Rational r{Integer(digits, 10)};
  if (exponent > 0) r *= pow10(exponent);
  if (exponent < 0) r /= pow10(-exponent);
  if (negative) r = -r;
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Rational exact_rational(long double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
  int exponent = 0;
  long double mantissa = std::frexp(value, &exponent);
  // Shift the 64-bit mantissa into an integer.
  mantissa = std::ldexp(mantissa, 64);
  exponent -= 64;
  const bool negative = mantissa < 0;
  if (negative) mantissa = -mantissa;
  auto high = static_cast<unsigned long long>(mantissa);
  Integer num(static_cast<unsigned long>(high >> 32));
  num <<= 32;
  num += static_cast<unsigned long>(high & 0xffffffffull);
  if (negative) num = -num;
  Rational r{num};
  if (exponent > 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else if (exponent < 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return r;
}

long double to_long_double(const Integer& value) {
  if (value.fits_slong_p()) return static_cast<long double>(value.get_si());
  // Large values: go through the decimal string, which strtold rounds correctly.
  return std::strtold(value.get_str().c_str(), nullptr);
}

long double to_long_double(const Rational& value) {
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
    return static_cast<long double>(value.get_num().get_si()) /
           static_cast<long double>(value.get_den().get_si());
  }
  return to_long_double(value.get_num()) / to_long_double(value.get_den());
}

}  // namespace entropic
