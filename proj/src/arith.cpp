#include "tupletfrob/arith.hpp"

#include <charconv>

namespace tupletfrob {

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 parse_i64(std::string_view text) {
  i64 value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw Error(Errc::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_i64(text));
  std::string_view view(text);
  return Rational(parse_i64(view.substr(0, slash)), parse_i64(view.substr(slash + 1)));
}

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NonPositiveElement: return "NonPositiveElement";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::ModulusNotInSemigroup: return "ModulusNotInSemigroup";
    case Errc::SemigroupIsN: return "SemigroupIsN";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidPattern: return "InvalidPattern";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::UnsupportedPattern: return "UnsupportedPattern";
    case Errc::ResidueMismatch: return "ResidueMismatch";
    case Errc::KBelowMinimum: return "KBelowMinimum";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::InsufficientSamples: return "InsufficientSamples";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tupletfrob
