#include "enl/rational.hpp"

#include "enl/verdict.hpp"

#include <cstddef>

namespace enl {

namespace {

bool parse_integer(const std::string& text, size_t begin, size_t end,
                   bool allow_sign, Int& out) {
  if (begin >= end) return false;
  size_t pos = begin;
  bool negative = false;
  if (allow_sign && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= end) return false;
  Int value = 0;
  for (; pos < end; ++pos) {
    char ch = text[pos];
    if (ch < '0' || ch > '9') return false;
    value = value * 10 + (ch - '0');
  }
  out = negative ? Int(-value) : value;
  return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
  const size_t slash = text.find('/');
  Int num;
  if (slash == std::string::npos) {
    if (!parse_integer(text, 0, text.size(), true, num)) {
      throw EnlError(ErrorKind::ParseError,
                     "not a rational: \"" + text + "\"");
    }
    return Rat(num);
  }
  Int den;
  if (!parse_integer(text, 0, slash, true, num) ||
      !parse_integer(text, slash + 1, text.size(), false, den)) {
    throw EnlError(ErrorKind::ParseError, "not a rational: \"" + text + "\"");
  }
  if (den == 0) {
    throw EnlError(ErrorKind::ParseError,
                   "zero denominator: \"" + text + "\"");
  }
  return Rat(num, den);
}

std::string rat_str(const Rat& value) {
  const Int num = numerator(value);
  const Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string lincomb_str(const std::vector<Rat>& coords,
                        const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    const Rat& c = coords[i];
    if (c == 0) continue;
    const std::string name =
        i < names.size() ? names[i] : "e" + std::to_string(i + 1);
    if (c == 1) {
      if (!out.empty()) out += "+";
      out += name;
    } else if (c == -1) {
      out += "-" + name;
    } else {
      std::string coeff = rat_str(c);
      if (!out.empty() && coeff[0] != '-') out += "+";
      out += coeff + "*" + name;
    }
  }
  return out.empty() ? "0" : out;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::PrereqFailed: return "PrereqFailed";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::UnknownTask: return "UnknownTask";
    case ErrorKind::InvalidCobracket: return "InvalidCobracket";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::NotNijenhuis: return "NotNijenhuis";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotRotaBaxter: return "NotRotaBaxter";
    case ErrorKind::NotMatchedPair: return "NotMatchedPair";
    case ErrorKind::NotBialgebra: return "NotBialgebra";
    case ErrorKind::NotENLBialgebra: return "NotENLBialgebra";
    case ErrorKind::NotComplementary: return "NotComplementary";
    case ErrorKind::MissingOperator: return "MissingOperator";
    case ErrorKind::MissingT: return "MissingT";
    case ErrorKind::SymmetricPartNotInvariant: return "SymmetricPartNotInvariant";
  }
  return "UnknownError";
}

} // namespace enl
