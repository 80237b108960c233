#include "fsc/rational.hpp"

#include <cctype>

#include "fsc/errors.hpp"

namespace fsc {

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) raise(Errc::RangeError, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num) / Rational(den);
}

Rational parse_rational(std::string_view text, std::size_t base_offset) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw Error(Errc::ParseError, "expected " + what, base_offset + pos);
  };

  auto parse_int = [&](bool allow_sign) -> BigInt {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin) fail("integer");
    return BigInt(std::string(text.substr(start, pos - start)));
  };

  BigInt num = parse_int(true);
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = parse_int(false);
    if (den == 0) throw Error(Errc::ParseError, "zero denominator", base_offset + pos - 1);
  }
  if (pos != text.size()) fail("end of number");
  return make_rational(num, den);
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

BigInt floor_rational(const Rational& value) {
  BigInt q = numerator(value) / denominator(value);
  if (numerator(value) < 0 && q * denominator(value) != numerator(value)) --q;
  return q;
}

BigInt ceil_rational(const Rational& value) { return -floor_rational(-value); }

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::RangeError: return "RangeError";
    case Errc::DualUndefined: return "DualUndefined";
    case Errc::ThetaOutOfRange: return "ThetaOutOfRange";
    case Errc::CoefficientsNotHolder: return "CoefficientsNotHolder";
    case Errc::EmptyRegion: return "EmptyRegion";
    case Errc::TargetNotInS: return "TargetNotInS";
    case Errc::SetEmpty: return "SetEmpty";
    case Errc::PlanInfeasible: return "PlanInfeasible";
    case Errc::DimsMismatch: return "DimsMismatch";
    case Errc::SupportTooLarge: return "SupportTooLarge";
    case Errc::AliasingRisk: return "AliasingRisk";
    case Errc::NotElliptic: return "NotElliptic";
    case Errc::NotHolder: return "NotHolder";
    case Errc::EmptyBand: return "EmptyBand";
    case Errc::IoError: return "IoError";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace fsc
