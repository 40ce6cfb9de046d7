#include "capkit/rational.hpp"

#include <limits>
#include <stdexcept>

#include "capkit/error.hpp"

namespace capkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Rational& value) {
  const Integer den = denominator(value);
  std::string out = numerator(value).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

Integer floor(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::int64_t floor_to_int64(const Rational& value) {
  const Integer f = floor(value);
  if (f > std::numeric_limits<std::int64_t>::max() || f < std::numeric_limits<std::int64_t>::min()) {
    throw std::out_of_range("floor of " + to_string(value) + " exceeds 64-bit range");
  }
  return f.convert_to<std::int64_t>();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::DegenerateDraw: return "DegenerateDraw";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::NotSubmodular: return "NotSubmodular";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace capkit
