#ifndef ENL_BUNDLE_HPP
#define ENL_BUNDLE_HPP

#include "enl/doubles.hpp"
#include "enl/lie.hpp"
#include "enl/matrix.hpp"
#include "enl/prelie.hpp"
#include "enl/representations.hpp"
#include "enl/yang_baxter.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace enl {

using OrderedJson = nlohmann::ordered_json;

/// Maximum dimension accepted anywhere in a bundle.
inline constexpr int kDimensionCap = 64;

struct OperatorEntry {
  std::optional<std::string> on; ///< algebra name; absent for module-space operators
  MatrixQ matrix;
};

struct FormEntry {
  std::string on;
  MatrixQ matrix;
};

struct CobracketEntry {
  std::string on;
  Cobracket delta;
};

struct RMatrixEntry {
  std::string on;
  MatrixQ r;
};

struct RepresentationEntry {
  std::string algebra;
  Representation rep;
  std::optional<std::string> Tname;
};

struct RelativeRBEntry {
  std::string representation;
  MatrixQ K;
};

struct MatchedPairEntry {
  std::string g;
  std::string h;
  MatchedPair mp;
  std::optional<std::string> EgName;
  std::optional<std::string> EhName;
};

struct TaskEntry {
  std::string kind;
  OrderedJson params; ///< the full task object as declared
};

/// In-memory form of the JSON bundle; every section preserves declaration
/// order, and all cross-references have been resolved at parse time.
struct Bundle {
  std::vector<std::pair<std::string, LieAlgebra>> lie_algebras;
  std::vector<std::pair<std::string, PreLieAlgebra>> prelie_algebras;
  std::vector<std::pair<std::string, OperatorEntry>> operators;
  std::vector<std::pair<std::string, FormEntry>> bilinear_forms;
  std::vector<std::pair<std::string, CobracketEntry>> cobrackets;
  std::vector<std::pair<std::string, RMatrixEntry>> rmatrices;
  std::vector<std::pair<std::string, RepresentationEntry>> representations;
  std::vector<std::pair<std::string, RelativeRBEntry>> relative_rb;
  std::vector<std::pair<std::string, MatchedPairEntry>> matched_pairs;
  std::vector<std::pair<std::string, TaskEntry>> tasks;

  const LieAlgebra& algebra(const std::string& name) const;
  const PreLieAlgebra& prelie(const std::string& name) const;
  const OperatorEntry& op(const std::string& name) const;
  const FormEntry& form(const std::string& name) const;
  const CobracketEntry& cobracket(const std::string& name) const;
  const RMatrixEntry& rmatrix(const std::string& name) const;
  const RepresentationEntry& representation(const std::string& name) const;
  const RelativeRBEntry& relrb(const std::string& name) const;
  const MatchedPairEntry& matched_pair(const std::string& name) const;
  const TaskEntry& task(const std::string& name) const;
};

/// Parses and fully validates a JSON bundle: all rationals parse, all
/// cross-references resolve, dimensions are consistent and capped, sparse
/// entries obey the i<j normalization. Structural validity only; the
/// mathematical identities are the job of the check tasks.
/// Throws ParseError, ValidationError, or DimensionCap.
Bundle parse_bundle(const std::string& text);

/// Stable serialization (declaration order, reduced rationals);
/// parse_bundle(serialize_bundle(b)) reproduces b.
std::string serialize_bundle(const Bundle& b);

/// Serialization helpers shared with task output rendering.
OrderedJson matrix_to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const OrderedJson& j, const std::string& where);
OrderedJson algebra_to_json(const LieAlgebra& g);
OrderedJson prelie_to_json(const PreLieAlgebra& p);
OrderedJson cobracket_to_json(const CobracketEntry& entry);

} // namespace enl

#endif
