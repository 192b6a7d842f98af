#include "enl/bundle.hpp"

#include <utility>

namespace enl {

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw EnlError(ErrorKind::ValidationError, where + ": " + what);
}

const OrderedJson& require_object(const OrderedJson& j,
                                  const std::string& where) {
  if (!j.is_object()) invalid(where, "expected an object");
  return j;
}

std::string require_string(const OrderedJson& j, const std::string& key,
                           const std::string& where) {
  if (!j.contains(key) || !j[key].is_string()) {
    invalid(where, "missing string field \"" + key + "\"");
  }
  return j[key].get<std::string>();
}

int require_dim(const OrderedJson& j, const std::string& key,
                const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    invalid(where, "missing integer field \"" + key + "\"");
  }
  const long long dim = j[key].get<long long>();
  if (dim < 0) invalid(where, "negative \"" + key + "\"");
  if (dim > kDimensionCap) {
    throw EnlError(ErrorKind::DimensionCap,
                   where + ": dimension " + std::to_string(dim) +
                       " exceeds the cap of " +
                       std::to_string(kDimensionCap));
  }
  return static_cast<int>(dim);
}

std::vector<std::string> optional_basis(const OrderedJson& j, int dim,
                                        const std::string& where) {
  if (!j.contains("basis")) return {};
  const OrderedJson& names = j["basis"];
  if (!names.is_array()) invalid(where, "\"basis\" must be an array");
  std::vector<std::string> out;
  for (const OrderedJson& n : names) {
    if (!n.is_string()) invalid(where, "basis names must be strings");
    out.push_back(n.get<std::string>());
  }
  if (static_cast<int>(out.size()) != dim) {
    invalid(where, "basis name count does not match dim");
  }
  return out;
}

std::vector<SparseEntry> sparse_entries(const OrderedJson& j,
                                        const std::string& key,
                                        const std::string& where) {
  std::vector<SparseEntry> out;
  if (!j.contains(key)) return out;
  const OrderedJson& list = j[key];
  if (!list.is_array()) invalid(where, "\"" + key + "\" must be an array");
  for (const OrderedJson& item : list) {
    if (!item.is_array() || item.size() != 4 ||
        !item[0].is_number_integer() || !item[1].is_number_integer() ||
        !item[2].is_number_integer() || !item[3].is_string()) {
      invalid(where, "entries must have the shape [i,j,k,\"c\"]");
    }
    SparseEntry e;
    e.a = item[0].get<int>();
    e.b = item[1].get<int>();
    e.c = item[2].get<int>();
    e.value = parse_rational(item[3].get<std::string>());
    out.push_back(std::move(e));
  }
  return out;
}

/// Rethrows an EnlError with the entity name prepended, preserving the kind.
template <typename Fn>
auto with_context(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const EnlError& e) {
    throw EnlError(e.kind(), where + ": " + e.what());
  }
}

template <typename T>
const T* find_entry(const std::vector<std::pair<std::string, T>>& section,
                    const std::string& name) {
  for (const auto& [key, value] : section) {
    if (key == name) return &value;
  }
  return nullptr;
}

template <typename T>
const T& require_entry(const std::vector<std::pair<std::string, T>>& section,
                       const std::string& name, const char* what) {
  const T* found = find_entry(section, name);
  if (!found) {
    throw EnlError(ErrorKind::UnknownName,
                   std::string(what) + " \"" + name + "\" is not defined");
  }
  return *found;
}

int algebra_dim(const Bundle& b, const std::string& name,
                const std::string& where) {
  if (const LieAlgebra* g = find_entry(b.lie_algebras, name)) return g->dim;
  if (const PreLieAlgebra* p = find_entry(b.prelie_algebras, name))
    return p->dim;
  throw EnlError(ErrorKind::UnknownName,
                 where + ": algebra \"" + name + "\" is not defined");
}

} // namespace

const LieAlgebra& Bundle::algebra(const std::string& name) const {
  return require_entry(lie_algebras, name, "lie algebra");
}
const PreLieAlgebra& Bundle::prelie(const std::string& name) const {
  return require_entry(prelie_algebras, name, "pre-Lie algebra");
}
const OperatorEntry& Bundle::op(const std::string& name) const {
  return require_entry(operators, name, "operator");
}
const FormEntry& Bundle::form(const std::string& name) const {
  return require_entry(bilinear_forms, name, "bilinear form");
}
const CobracketEntry& Bundle::cobracket(const std::string& name) const {
  return require_entry(cobrackets, name, "cobracket");
}
const RMatrixEntry& Bundle::rmatrix(const std::string& name) const {
  return require_entry(rmatrices, name, "r-matrix");
}
const RepresentationEntry& Bundle::representation(
    const std::string& name) const {
  return require_entry(representations, name, "representation");
}
const RelativeRBEntry& Bundle::relrb(const std::string& name) const {
  return require_entry(relative_rb, name, "relative Rota-Baxter entry");
}
const MatchedPairEntry& Bundle::matched_pair(const std::string& name) const {
  return require_entry(matched_pairs, name, "matched pair");
}
const TaskEntry& Bundle::task(const std::string& name) const {
  return require_entry(tasks, name, "task");
}

MatrixQ matrix_from_json(const OrderedJson& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    invalid(where, "matrix must be a non-empty array of rows");
  }
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  for (const OrderedJson& row : j) {
    if (!row.is_array()) invalid(where, "matrix rows must be arrays");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols) {
      invalid(where, "matrix rows have inconsistent lengths");
    }
  }
  if (cols == 0) invalid(where, "matrix rows must be non-empty");
  MatrixQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const OrderedJson& cell = j[i][k];
      if (!cell.is_string()) invalid(where, "matrix entries must be strings");
      m.at(i, k) = with_context(where, [&] {
        return parse_rational(cell.get<std::string>());
      });
    }
  }
  return m;
}

OrderedJson matrix_to_json(const MatrixQ& m) {
  OrderedJson rows = OrderedJson::array();
  for (int i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

MatrixQ square_matrix_on(const OrderedJson& j, const char* key, int dim,
                         const std::string& where) {
  if (!j.contains(key)) invalid(where, std::string("missing \"") + key + "\"");
  MatrixQ m = matrix_from_json(j[key], where);
  if (m.rows() != dim || m.cols() != dim) {
    invalid(where, std::string("\"") + key + "\" must be " +
                       std::to_string(dim) + "x" + std::to_string(dim));
  }
  return m;
}

void parse_lie_algebras(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "lie_algebras." + name;
    require_object(body, where);
    const int dim = require_dim(body, "dim", where);
    std::vector<std::string> names = optional_basis(body, dim, where);
    const std::vector<SparseEntry> entries =
        sparse_entries(body, "brackets", where);
    b.lie_algebras.emplace_back(name, with_context(where, [&] {
      return make_lie(dim, std::move(names), entries);
    }));
  }
}

void parse_prelie_algebras(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "prelie_algebras." + name;
    require_object(body, where);
    const int dim = require_dim(body, "dim", where);
    std::vector<std::string> names = optional_basis(body, dim, where);
    const std::vector<SparseEntry> entries =
        sparse_entries(body, "products", where);
    b.prelie_algebras.emplace_back(name, with_context(where, [&] {
      return make_prelie(dim, std::move(names), entries);
    }));
  }
}

void parse_operators(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "operators." + name;
    require_object(body, where);
    OperatorEntry entry;
    if (body.contains("on")) {
      entry.on = require_string(body, "on", where);
      const int dim = algebra_dim(b, *entry.on, where);
      entry.matrix = square_matrix_on(body, "matrix", dim, where);
    } else {
      if (!body.contains("matrix")) invalid(where, "missing \"matrix\"");
      entry.matrix = matrix_from_json(body["matrix"], where);
      if (entry.matrix.rows() != entry.matrix.cols()) {
        invalid(where, "operators must be square");
      }
      if (entry.matrix.rows() > kDimensionCap) {
        throw EnlError(ErrorKind::DimensionCap, where + ": too large");
      }
    }
    b.operators.emplace_back(name, std::move(entry));
  }
}

void parse_bilinear_forms(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "bilinear_forms." + name;
    require_object(body, where);
    FormEntry entry;
    entry.on = require_string(body, "on", where);
    const int dim = algebra_dim(b, entry.on, where);
    entry.matrix = square_matrix_on(body, "matrix", dim, where);
    b.bilinear_forms.emplace_back(name, std::move(entry));
  }
}

void parse_cobrackets(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "cobrackets." + name;
    require_object(body, where);
    CobracketEntry entry;
    entry.on = require_string(body, "on", where);
    const LieAlgebra* g = find_entry(b.lie_algebras, entry.on);
    if (!g) {
      throw EnlError(ErrorKind::UnknownName,
                     where + ": lie algebra \"" + entry.on +
                         "\" is not defined");
    }
    const std::vector<SparseEntry> entries =
        sparse_entries(body, "entries", where);
    entry.delta = with_context(where, [&] {
      return make_cobracket(g->dim, g->basis, entries);
    });
    b.cobrackets.emplace_back(name, std::move(entry));
  }
}

void parse_rmatrices(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "rmatrices." + name;
    require_object(body, where);
    RMatrixEntry entry;
    entry.on = require_string(body, "on", where);
    const int dim = algebra_dim(b, entry.on, where);
    entry.r = square_matrix_on(body, "matrix", dim, where);
    b.rmatrices.emplace_back(name, std::move(entry));
  }
}

void parse_representations(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "representations." + name;
    require_object(body, where);
    RepresentationEntry entry;
    entry.algebra = require_string(body, "algebra", where);
    const LieAlgebra* g = find_entry(b.lie_algebras, entry.algebra);
    if (!g) {
      throw EnlError(ErrorKind::UnknownName,
                     where + ": lie algebra \"" + entry.algebra +
                         "\" is not defined");
    }
    const int dimW = require_dim(body, "dim", where);
    entry.rep.algebra = *g;
    entry.rep.dimW = dimW;
    entry.rep.wbasis = optional_basis(body, dimW, where);
    if (entry.rep.wbasis.empty()) {
      for (int i = 1; i <= dimW; ++i) {
        entry.rep.wbasis.push_back("w" + std::to_string(i));
      }
    }
    if (!body.contains("rho") || !body["rho"].is_array() ||
        static_cast<int>(body["rho"].size()) != g->dim) {
      invalid(where, "\"rho\" must list one matrix per algebra basis element");
    }
    for (const OrderedJson& mj : body["rho"]) {
      MatrixQ m = matrix_from_json(mj, where);
      if (m.rows() != dimW || m.cols() != dimW) {
        invalid(where, "rho matrices must match the module dimension");
      }
      entry.rep.rho.push_back(std::move(m));
    }
    if (body.contains("T")) {
      entry.Tname = require_string(body, "T", where);
      const OperatorEntry* t = find_entry(b.operators, *entry.Tname);
      if (!t) {
        throw EnlError(ErrorKind::UnknownName,
                       where + ": operator \"" + *entry.Tname +
                           "\" is not defined");
      }
      if (t->matrix.rows() != dimW || t->matrix.cols() != dimW) {
        invalid(where, "T must match the module dimension");
      }
      entry.rep.T = t->matrix;
    }
    b.representations.emplace_back(name, std::move(entry));
  }
}

void parse_relative_rb(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "relative_rb." + name;
    require_object(body, where);
    RelativeRBEntry entry;
    entry.representation = require_string(body, "representation", where);
    const RepresentationEntry* rep =
        find_entry(b.representations, entry.representation);
    if (!rep) {
      throw EnlError(ErrorKind::UnknownName,
                     where + ": representation \"" + entry.representation +
                         "\" is not defined");
    }
    if (!body.contains("K")) invalid(where, "missing \"K\"");
    entry.K = matrix_from_json(body["K"], where);
    if (entry.K.rows() != rep->rep.algebra.dim ||
        entry.K.cols() != rep->rep.dimW) {
      invalid(where, "K must be dim(algebra) x dim(module)");
    }
    b.relative_rb.emplace_back(name, std::move(entry));
  }
}

void parse_matched_pairs(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "matched_pairs." + name;
    require_object(body, where);
    MatchedPairEntry entry;
    entry.g = require_string(body, "g", where);
    entry.h = require_string(body, "h", where);
    const LieAlgebra* g = find_entry(b.lie_algebras, entry.g);
    const LieAlgebra* h = find_entry(b.lie_algebras, entry.h);
    if (!g || !h) {
      throw EnlError(ErrorKind::UnknownName,
                     where + ": matched pair algebras must be defined");
    }
    entry.mp.g = *g;
    entry.mp.h = *h;
    const auto action = [&](const char* key, int actorDim, int spaceDim) {
      if (!body.contains(key) || !body[key].is_array() ||
          static_cast<int>(body[key].size()) != actorDim) {
        invalid(where, std::string("\"") + key +
                           "\" must list one matrix per acting basis element");
      }
      std::vector<MatrixQ> ms;
      for (const OrderedJson& mj : body[key]) {
        MatrixQ m = matrix_from_json(mj, where);
        if (m.rows() != spaceDim || m.cols() != spaceDim) {
          invalid(where, std::string("\"") + key +
                             "\" matrices must match the acted-on dimension");
        }
        ms.push_back(std::move(m));
      }
      return ms;
    };
    entry.mp.rho = action("rho", g->dim, h->dim);
    entry.mp.mu = action("mu", h->dim, g->dim);
    if (body.contains("Eg")) {
      entry.EgName = require_string(body, "Eg", where);
      const OperatorEntry& op =
          require_entry(b.operators, *entry.EgName, "operator");
      if (op.matrix.rows() != g->dim) invalid(where, "Eg shape");
      entry.mp.Eg = op.matrix;
    }
    if (body.contains("Eh")) {
      entry.EhName = require_string(body, "Eh", where);
      const OperatorEntry& op =
          require_entry(b.operators, *entry.EhName, "operator");
      if (op.matrix.rows() != h->dim) invalid(where, "Eh shape");
      entry.mp.Eh = op.matrix;
    }
    b.matched_pairs.emplace_back(name, std::move(entry));
  }
}

void parse_tasks(Bundle& b, const OrderedJson& section) {
  for (const auto& [name, body] : section.items()) {
    const std::string where = "tasks." + name;
    require_object(body, where);
    TaskEntry entry;
    entry.kind = require_string(body, "kind", where);
    entry.params = body;
    b.tasks.emplace_back(name, std::move(entry));
  }
}

} // namespace

Bundle parse_bundle(const std::string& text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw EnlError(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object()) {
    throw EnlError(ErrorKind::ValidationError,
                   "bundle must be a JSON object");
  }
  static const char* kSections[] = {
      "lie_algebras", "prelie_algebras", "operators",   "bilinear_forms",
      "cobrackets",   "rmatrices",       "representations",
      "relative_rb",  "matched_pairs",   "tasks"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* s : kSections) known = known || key == s;
    if (!known) {
      throw EnlError(ErrorKind::ValidationError,
                     "unknown section \"" + key + "\"");
    }
    if (!value.is_object()) {
      throw EnlError(ErrorKind::ValidationError,
                     "section \"" + key + "\" must be an object");
    }
  }
  Bundle b;
  if (j.contains("lie_algebras")) parse_lie_algebras(b, j["lie_algebras"]);
  if (j.contains("prelie_algebras"))
    parse_prelie_algebras(b, j["prelie_algebras"]);
  if (j.contains("operators")) parse_operators(b, j["operators"]);
  if (j.contains("bilinear_forms"))
    parse_bilinear_forms(b, j["bilinear_forms"]);
  if (j.contains("cobrackets")) parse_cobrackets(b, j["cobrackets"]);
  if (j.contains("rmatrices")) parse_rmatrices(b, j["rmatrices"]);
  if (j.contains("representations"))
    parse_representations(b, j["representations"]);
  if (j.contains("relative_rb")) parse_relative_rb(b, j["relative_rb"]);
  if (j.contains("matched_pairs")) parse_matched_pairs(b, j["matched_pairs"]);
  if (j.contains("tasks")) parse_tasks(b, j["tasks"]);
  return b;
}

namespace {

OrderedJson sparse_to_json(const Tensor3Q& t, bool antisymmetric_ij) {
  OrderedJson list = OrderedJson::array();
  for (int a = 0; a < t.d0(); ++a) {
    for (int b0 = 0; b0 < t.d1(); ++b0) {
      for (int c = 0; c < t.d2(); ++c) {
        if (t.at(a, b0, c) == 0) continue;
        if (antisymmetric_ij && a >= b0) continue;
        list.push_back(OrderedJson::array(
            {a, b0, c, rat_str(t.at(a, b0, c))}));
      }
    }
  }
  return list;
}

/// Cobracket tensor d(k,i,j): emit entries with i<j only.
OrderedJson cobracket_entries_json(const Tensor3Q& d) {
  OrderedJson list = OrderedJson::array();
  for (int k = 0; k < d.d0(); ++k) {
    for (int i = 0; i < d.d1(); ++i) {
      for (int j = i + 1; j < d.d2(); ++j) {
        if (d.at(k, i, j) == 0) continue;
        list.push_back(OrderedJson::array({k, i, j, rat_str(d.at(k, i, j))}));
      }
    }
  }
  return list;
}

} // namespace

OrderedJson algebra_to_json(const LieAlgebra& g) {
  OrderedJson out = OrderedJson::object();
  out["dim"] = g.dim;
  out["basis"] = g.basis;
  OrderedJson list = OrderedJson::array();
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k)
        if (g.c.at(i, j, k) != 0)
          list.push_back(OrderedJson::array({i, j, k, rat_str(g.c.at(i, j, k))}));
  out["brackets"] = std::move(list);
  return out;
}

OrderedJson prelie_to_json(const PreLieAlgebra& p) {
  OrderedJson out = OrderedJson::object();
  out["dim"] = p.dim;
  out["basis"] = p.basis;
  out["products"] = sparse_to_json(p.m, false);
  return out;
}

OrderedJson cobracket_to_json(const CobracketEntry& entry) {
  OrderedJson out = OrderedJson::object();
  out["on"] = entry.on;
  out["entries"] = cobracket_entries_json(entry.delta.d);
  return out;
}

std::string serialize_bundle(const Bundle& b) {
  OrderedJson j = OrderedJson::object();
  if (!b.lie_algebras.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, g] : b.lie_algebras)
      section[name] = algebra_to_json(g);
    j["lie_algebras"] = std::move(section);
  }
  if (!b.prelie_algebras.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, p] : b.prelie_algebras)
      section[name] = prelie_to_json(p);
    j["prelie_algebras"] = std::move(section);
  }
  if (!b.operators.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, entry] : b.operators) {
      OrderedJson body = OrderedJson::object();
      if (entry.on) body["on"] = *entry.on;
      body["matrix"] = matrix_to_json(entry.matrix);
      section[name] = std::move(body);
    }
    j["operators"] = std::move(section);
  }
  if (!b.bilinear_forms.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, entry] : b.bilinear_forms) {
      OrderedJson body = OrderedJson::object();
      body["on"] = entry.on;
      body["matrix"] = matrix_to_json(entry.matrix);
      section[name] = std::move(body);
    }
    j["bilinear_forms"] = std::move(section);
  }
  if (!b.cobrackets.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, entry] : b.cobrackets)
      section[name] = cobracket_to_json(entry);
    j["cobrackets"] = std::move(section);
  }
  if (!b.rmatrices.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, entry] : b.rmatrices) {
      OrderedJson body = OrderedJson::object();
      body["on"] = entry.on;
      body["matrix"] = matrix_to_json(entry.r);
      section[name] = std::move(body);
    }
    j["rmatrices"] = std::move(section);
  }
  if (!b.representations.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, entry] : b.representations) {
      OrderedJson body = OrderedJson::object();
      body["algebra"] = entry.algebra;
      body["dim"] = entry.rep.dimW;
      body["basis"] = entry.rep.wbasis;
      OrderedJson rho = OrderedJson::array();
      for (const MatrixQ& m : entry.rep.rho) rho.push_back(matrix_to_json(m));
      body["rho"] = std::move(rho);
      if (entry.Tname) body["T"] = *entry.Tname;
      section[name] = std::move(body);
    }
    j["representations"] = std::move(section);
  }
  if (!b.relative_rb.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, entry] : b.relative_rb) {
      OrderedJson body = OrderedJson::object();
      body["representation"] = entry.representation;
      body["K"] = matrix_to_json(entry.K);
      section[name] = std::move(body);
    }
    j["relative_rb"] = std::move(section);
  }
  if (!b.matched_pairs.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, entry] : b.matched_pairs) {
      OrderedJson body = OrderedJson::object();
      body["g"] = entry.g;
      body["h"] = entry.h;
      OrderedJson rho = OrderedJson::array();
      for (const MatrixQ& m : entry.mp.rho) rho.push_back(matrix_to_json(m));
      body["rho"] = std::move(rho);
      OrderedJson mu = OrderedJson::array();
      for (const MatrixQ& m : entry.mp.mu) mu.push_back(matrix_to_json(m));
      body["mu"] = std::move(mu);
      if (entry.EgName) body["Eg"] = *entry.EgName;
      if (entry.EhName) body["Eh"] = *entry.EhName;
      section[name] = std::move(body);
    }
    j["matched_pairs"] = std::move(section);
  }
  if (!b.tasks.empty()) {
    OrderedJson section = OrderedJson::object();
    for (const auto& [name, entry] : b.tasks) section[name] = entry.params;
    j["tasks"] = std::move(section);
  }
  return j.dump(2) + "\n";
}

} // namespace enl
