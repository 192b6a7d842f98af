#ifndef ENL_VERDICT_HPP
#define ENL_VERDICT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace enl {

/// Error identifiers; the CLI reports these names verbatim on ERROR lines.
enum class ErrorKind {
  ParseError,
  ValidationError,
  DimensionCap,
  ShapeMismatch,
  SingularMatrix,
  PrereqFailed,
  UnknownName,
  UnknownTask,
  InvalidCobracket,
  InvalidAlgebra,
  NotNijenhuis,
  NotEquivariant,
  NotRotaBaxter,
  NotMatchedPair,
  NotBialgebra,
  NotENLBialgebra,
  NotComplementary,
  MissingOperator,
  MissingT,
  SymmetricPartNotInvariant,
};

const char* error_kind_name(ErrorKind kind);

/// The library's only exception type; what() carries the detail message.
class EnlError : public std::runtime_error {
public:
  EnlError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), m_kind(kind) {}

  ErrorKind kind() const { return m_kind; }

private:
  ErrorKind m_kind;
};

/// Location of the first violated identity: the basis indices involved, the
/// corresponding display names, and both sides of the identity rendered as
/// reduced rational linear combinations.
struct Witness {
  std::vector<int> indices;
  std::vector<std::string> names;
  std::string lhs; ///< value actually obtained ("got")
  std::string rhs; ///< value required by the identity ("expected")
};

/// Outcome of a check: pass, or the first failing clause with its witness.
struct Verdict {
  bool pass = true;
  std::string code; ///< name of the failing clause when pass = false
  std::optional<Witness> witness;

  static Verdict ok() { return Verdict{}; }
  static Verdict fail(std::string code, Witness w) {
    Verdict v;
    v.pass = false;
    v.code = std::move(code);
    v.witness = std::move(w);
    return v;
  }
  static Verdict fail(std::string code) {
    Verdict v;
    v.pass = false;
    v.code = std::move(code);
    return v;
  }

  explicit operator bool() const { return pass; }
};

} // namespace enl

#endif
