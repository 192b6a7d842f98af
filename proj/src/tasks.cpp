#include "enl/tasks.hpp"

#include "enl/doubles.hpp"
#include "enl/operators.hpp"
#include "enl/prelie.hpp"
#include "enl/representations.hpp"
#include "enl/yang_baxter.hpp"

#include <chrono>
#include <unordered_map>
#include <utility>

namespace enl {

namespace {

/// Canonical argument order used to render each task kind's display name.
const std::vector<const char*>* display_keys(const std::string& kind) {
  static const std::unordered_map<std::string, std::vector<const char*>> table{
      {"check_lie", {"algebra"}},
      {"check_leibniz", {"algebra", "prelie"}},
      {"check_prelie", {"prelie"}},
      {"check_equivariant", {"algebra", "operator"}},
      {"check_averaging", {"algebra", "operator"}},
      {"torsion", {"algebra", "operator"}},
      {"check_rota_baxter", {"algebra", "operator", "weight"}},
      {"check_invariant_form", {"algebra", "form"}},
      {"check_cobracket", {"cobracket"}},
      {"check_bialgebra", {"bialgebra", "operator", "level"}},
      {"check_matched_pair", {"matched_pair", "level"}},
      {"check_manin_triple", {"bialgebra", "d", "Ed", "S", "operator"}},
      {"check_en_rmatrix", {"rmatrix", "operator", "weak"}},
      {"check_relative_rb", {"relative_rb", "operator", "level"}},
      {"check_pre_enl", {"prelie", "operator", "mode"}},
      {"check_enl_rb", {"algebra", "B", "E", "form", "weight"}},
      {"check_quadratic_enl", {"algebra", "operator", "form"}},
      {"check_representation", {"representation"}},
      {"check_en_representation", {"representation", "operator", "mode"}},
      {"schouten", {"rmatrix"}},
      {"dual_bracket", {"rmatrix"}},
      {"coadjoint_correspondence",
       {"algebra", "operator", "form", "K", "B"}},
      {"double", {"bialgebra", "operator"}},
      {"bicross", {"matched_pair"}},
      {"semidirect", {"representation", "operator"}},
      {"descendent", {"relative_rb", "algebra", "operator", "weight"}},
      {"hierarchy", {"bialgebra", "algebra", "operator", "levels"}},
      {"rbs_rmatrix", {"algebra", "B", "E", "form", "weight"}},
      {"rk_lift", {"relative_rb", "operator"}},
      {"canonical_r", {"prelie", "operator"}},
      {"centroid", {"algebra"}},
      {"dualize", {"cobracket"}},
      {"deform", {"matched_pair", "algebra", "operator", "mode"}},
  };
  auto it = table.find(kind);
  return it == table.end() ? nullptr : &it->second;
}

std::string render_display(const std::string& kind, const OrderedJson& params) {
  std::string out = kind + "(";
  bool first = true;
  if (const std::vector<const char*>* keys = display_keys(kind)) {
    for (const char* key : *keys) {
      if (!params.contains(key)) continue;
      const OrderedJson& v = params[key];
      std::string piece;
      if (v.is_string()) {
        piece = v.get<std::string>();
      } else if (v.is_number_integer()) {
        piece = std::to_string(v.get<long long>());
      } else if (v.is_boolean()) {
        if (!v.get<bool>()) continue;
        piece = key;
      } else {
        continue;
      }
      if (!first) out += ",";
      out += piece;
      first = false;
    }
  }
  out += ")";
  return out;
}

/// Parameter access with task-context error messages.
struct TaskCtx {
  const Bundle& b;
  const OrderedJson& p;
  std::string where;

  bool has(const char* key) const { return p.contains(key); }

  std::string str(const char* key) const {
    if (!p.contains(key) || !p[key].is_string()) {
      throw EnlError(ErrorKind::ValidationError,
                     where + ": missing string parameter \"" + key + "\"");
    }
    return p[key].get<std::string>();
  }

  std::optional<std::string> str_opt(const char* key) const {
    if (!p.contains(key)) return std::nullopt;
    return str(key);
  }

  Rat rational(const char* key) const {
    if (p.contains(key) && p[key].is_number_integer()) {
      return Rat(p[key].get<long long>());
    }
    return parse_rational(str(key));
  }

  int integer(const char* key) const {
    if (!p.contains(key) || !p[key].is_number_integer()) {
      throw EnlError(ErrorKind::ValidationError,
                     where + ": missing integer parameter \"" + key + "\"");
    }
    return p[key].get<int>();
  }

  bool flag(const char* key) const {
    if (!p.contains(key)) return false;
    if (!p[key].is_boolean()) {
      throw EnlError(ErrorKind::ValidationError,
                     where + ": parameter \"" + key + "\" must be a boolean");
    }
    return p[key].get<bool>();
  }

  const MatrixQ& op(const char* key) const { return b.op(str(key)).matrix; }

  std::optional<MatrixQ> op_opt(const char* key) const {
    if (!has(key)) return std::nullopt;
    return b.op(str(key)).matrix;
  }

  Bialgebra bialgebra() const {
    const CobracketEntry& ce = b.cobracket(str("bialgebra"));
    Bialgebra bia;
    bia.g = b.algebra(ce.on);
    bia.delta = ce.delta;
    bia.E = op_opt("operator");
    return bia;
  }

  RelativeRB relrb() const {
    const RelativeRBEntry& entry = b.relrb(str("relative_rb"));
    return RelativeRB{b.representation(entry.representation).rep, entry.K};
  }

  std::vector<std::vector<Rat>> vectors(const char* key) const {
    if (!p.contains(key) || !p[key].is_array()) {
      throw EnlError(ErrorKind::ValidationError,
                     where + ": missing vector-list parameter \"" + key +
                         "\"");
    }
    std::vector<std::vector<Rat>> out;
    for (const OrderedJson& row : p[key]) {
      if (!row.is_array()) {
        throw EnlError(ErrorKind::ValidationError,
                       where + ": \"" + key + "\" must list vectors");
      }
      std::vector<Rat> v;
      for (const OrderedJson& cell : row) {
        if (!cell.is_string()) {
          throw EnlError(ErrorKind::ValidationError,
                         where + ": vector entries must be rational strings");
        }
        v.push_back(parse_rational(cell.get<std::string>()));
      }
      out.push_back(std::move(v));
    }
    return out;
  }
};

BialgLevel parse_bialg_level(const std::string& s, const std::string& where) {
  if (s == "lie") return BialgLevel::lie;
  if (s == "nl") return BialgLevel::nl;
  if (s == "enl") return BialgLevel::enl;
  throw EnlError(ErrorKind::ValidationError,
                 where + ": unknown level \"" + s + "\"");
}

MPLevel parse_mp_level(const std::string& s, const std::string& where) {
  if (s == "lie") return MPLevel::lie;
  if (s == "enl") return MPLevel::enl;
  throw EnlError(ErrorKind::ValidationError,
                 where + ": unknown level \"" + s + "\"");
}

RelRBLevel parse_relrb_level(const std::string& s, const std::string& where) {
  if (s == "plain") return RelRBLevel::plain;
  if (s == "en") return RelRBLevel::en;
  throw EnlError(ErrorKind::ValidationError,
                 where + ": unknown level \"" + s + "\"");
}

PreENLMode parse_pre_enl_mode(const std::string& s, const std::string& where) {
  if (s == "weak") return PreENLMode::weak;
  if (s == "strong") return PreENLMode::strong;
  throw EnlError(ErrorKind::ValidationError,
                 where + ": unknown mode \"" + s + "\"");
}

ENMode parse_en_mode(const std::string& s, const std::string& where) {
  if (s == "equivariant") return ENMode::equivariant;
  if (s == "n_compatible") return ENMode::n_compatible;
  if (s == "averaging_compatible") return ENMode::averaging_compatible;
  throw EnlError(ErrorKind::ValidationError,
                 where + ": unknown mode \"" + s + "\"");
}

DeformMode parse_deform_mode(const std::string& s, const std::string& where) {
  if (s == "general") return DeformMode::general;
  if (s == "equivariant") return DeformMode::equivariant;
  throw EnlError(ErrorKind::ValidationError,
                 where + ": unknown mode \"" + s + "\"");
}

/// PASS iff the tensor vanishes; otherwise the first nonzero component.
Verdict tensor_zero_verdict(const Tensor3Q& t,
                            const std::vector<std::string>& names,
                            const std::string& code) {
  for (int i = 0; i < t.d0(); ++i) {
    for (int j = 0; j < t.d1(); ++j) {
      for (int k = 0; k < t.d2(); ++k) {
        if (t.at(i, j, k) == 0) continue;
        Witness w;
        w.indices = {i, j, k};
        w.names = {names[i], names[j], names[k]};
        w.lhs = rat_str(t.at(i, j, k));
        w.rhs = "0";
        return Verdict::fail(code, std::move(w));
      }
    }
  }
  return Verdict::ok();
}

void put_output(Report& rep, const char* section, const std::string& key,
                OrderedJson def) {
  if (!rep.outputs.contains(section)) {
    rep.outputs[section] = OrderedJson::object();
  }
  rep.outputs[section][key] = std::move(def);
}

OrderedJson op_json(const std::optional<std::string>& on, const MatrixQ& m) {
  OrderedJson body = OrderedJson::object();
  if (on) body["on"] = *on;
  body["matrix"] = matrix_to_json(m);
  return body;
}

OrderedJson on_matrix_json(const std::string& on, const MatrixQ& m) {
  OrderedJson body = OrderedJson::object();
  body["on"] = on;
  body["matrix"] = matrix_to_json(m);
  return body;
}

void apply_verdict(Report& rep, const Verdict& v) {
  if (v.pass) return;
  rep.status = Report::Status::Fail;
  rep.code = v.code;
  rep.witness = v.witness;
}

/// Combined verdict over an indexed family, coded "level<k>".
void apply_leveled(Report& rep, const std::vector<Verdict>& vs) {
  for (size_t k = 0; k < vs.size(); ++k) {
    if (vs[k].pass) continue;
    Verdict v = vs[k];
    v.code = "level" + std::to_string(k + 1) + ":" + v.code;
    apply_verdict(rep, v);
    return;
  }
}

void dispatch(const Bundle& b, const std::string& kind, const TaskCtx& ctx,
              Report& rep) {
  const std::string task_name = rep.name;

  if (kind == "check_lie") {
    apply_verdict(rep, check_lie(b.algebra(ctx.str("algebra"))));
  } else if (kind == "check_leibniz") {
    if (ctx.has("prelie")) {
      const PreLieAlgebra& p = b.prelie(ctx.str("prelie"));
      apply_verdict(rep, check_leibniz(p.m, p.basis));
    } else {
      const LieAlgebra& g = b.algebra(ctx.str("algebra"));
      apply_verdict(rep, check_leibniz(g.c, g.basis));
    }
  } else if (kind == "check_prelie") {
    apply_verdict(rep, check_prelie(b.prelie(ctx.str("prelie"))));
  } else if (kind == "check_equivariant") {
    apply_verdict(rep, check_equivariant(b.algebra(ctx.str("algebra")),
                                         ctx.op("operator")));
  } else if (kind == "check_averaging") {
    apply_verdict(rep, check_averaging(b.algebra(ctx.str("algebra")),
                                       ctx.op("operator")));
  } else if (kind == "torsion") {
    const LieAlgebra& g = b.algebra(ctx.str("algebra"));
    apply_verdict(rep, tensor_zero_verdict(
                           nijenhuis_torsion(g, ctx.op("operator")), g.basis,
                           "torsion"));
  } else if (kind == "check_rota_baxter") {
    apply_verdict(rep, check_rota_baxter(b.algebra(ctx.str("algebra")),
                                         ctx.op("operator"),
                                         ctx.rational("weight")));
  } else if (kind == "check_invariant_form") {
    const FormEntry& form = b.form(ctx.str("form"));
    apply_verdict(rep, check_invariant_form(b.algebra(ctx.str("algebra")),
                                            form.matrix));
  } else if (kind == "check_cobracket") {
    apply_verdict(rep, check_cobracket(b.cobracket(ctx.str("cobracket")).delta));
  } else if (kind == "check_bialgebra") {
    apply_verdict(rep, check_bialgebra(ctx.bialgebra(),
                                       parse_bialg_level(ctx.str("level"),
                                                         ctx.where)));
  } else if (kind == "check_matched_pair") {
    apply_verdict(rep,
                  check_matched_pair(b.matched_pair(ctx.str("matched_pair")).mp,
                                     parse_mp_level(ctx.str("level"),
                                                    ctx.where)));
  } else if (kind == "check_manin_triple") {
    ManinTripleInput input;
    if (ctx.has("bialgebra")) {
      DoubleResult dr = drinfeld_double(ctx.bialgebra());
      if (!dr.Ehat) {
        throw EnlError(ErrorKind::MissingOperator,
                       ctx.where +
                           ": the double carries no operator (enl level "
                           "did not pass)");
      }
      input.d = dr.d;
      input.Ed = *dr.Ehat;
      input.S = dr.S;
      const int n = dr.d.dim / 2;
      for (int i = 0; i < n; ++i) input.gBasis.push_back(basis_vec(2 * n, i));
      for (int i = 0; i < n; ++i)
        input.hBasis.push_back(basis_vec(2 * n, n + i));
    } else {
      input.d = b.algebra(ctx.str("d"));
      input.Ed = ctx.op("Ed");
      input.S = b.form(ctx.str("S")).matrix;
      input.gBasis = ctx.vectors("g_basis");
      input.hBasis = ctx.vectors("h_basis");
    }
    ManinReport mr = check_manin_triple(input);
    if (mr.Eg) put_output(rep, "operators", task_name + "_Eg",
                          op_json(std::nullopt, *mr.Eg));
    if (mr.Eh) put_output(rep, "operators", task_name + "_Eh",
                          op_json(std::nullopt, *mr.Eh));
    apply_verdict(rep, mr.verdict);
  } else if (kind == "check_en_rmatrix") {
    const RMatrixEntry& entry = b.rmatrix(ctx.str("rmatrix"));
    const LieAlgebra& g = b.algebra(entry.on);
    if (ctx.flag("weak")) {
      apply_verdict(rep, check_en_rmatrix_weak(g, entry.r, ctx.op("operator")));
    } else {
      apply_verdict(rep, check_en_rmatrix(g, entry.r, ctx.op("operator")));
    }
  } else if (kind == "check_relative_rb") {
    const RelRBLevel level = parse_relrb_level(ctx.str("level"), ctx.where);
    std::optional<MatrixQ> E = ctx.op_opt("operator");
    if (level == RelRBLevel::en && !E) {
      throw EnlError(ErrorKind::MissingOperator,
                     ctx.where + ": the en level requires an \"operator\"");
    }
    apply_verdict(rep, check_relative_rb(ctx.relrb(),
                                         E ? *E : MatrixQ(), level));
  } else if (kind == "check_pre_enl") {
    apply_verdict(rep, check_pre_enl(b.prelie(ctx.str("prelie")),
                                     ctx.op("operator"),
                                     parse_pre_enl_mode(ctx.str("mode"),
                                                        ctx.where)));
  } else if (kind == "check_enl_rb" || kind == "rbs_rmatrix") {
    QuadraticENLRB input;
    input.g = b.algebra(ctx.str("algebra"));
    input.B = ctx.op("B");
    input.E = ctx.op("E");
    input.S = b.form(ctx.str("form")).matrix;
    input.lambda = ctx.rational("weight");
    if (kind == "check_enl_rb") {
      apply_verdict(rep, check_enl_rb(input));
    } else {
      MatrixQ r = rb_to_rmatrix(input);
      put_output(rep, "rmatrices", task_name + "_r",
                 on_matrix_json(ctx.str("algebra"), r));
    }
  } else if (kind == "check_quadratic_enl") {
    apply_verdict(rep, check_quadratic_enl(b.algebra(ctx.str("algebra")),
                                           ctx.op("operator"),
                                           b.form(ctx.str("form")).matrix));
  } else if (kind == "check_representation") {
    apply_verdict(rep,
                  check_representation(
                      b.representation(ctx.str("representation")).rep));
  } else if (kind == "check_en_representation") {
    apply_verdict(rep, check_en_representation(
                           b.representation(ctx.str("representation")).rep,
                           ctx.op("operator"),
                           parse_en_mode(ctx.str("mode"), ctx.where)));
  } else if (kind == "schouten") {
    const RMatrixEntry& entry = b.rmatrix(ctx.str("rmatrix"));
    const LieAlgebra& g = b.algebra(entry.on);
    apply_verdict(rep, tensor_zero_verdict(schouten(g, entry.r), g.basis,
                                           "schouten"));
  } else if (kind == "dual_bracket") {
    const RMatrixEntry& entry = b.rmatrix(ctx.str("rmatrix"));
    const LieAlgebra& g = b.algebra(entry.on);
    DualBracketReport dbr = dual_bracket_from_r(g, entry.r);
    put_output(rep, "lie_algebras", task_name + "_gstar",
               algebra_to_json(dbr.gstar));
    apply_verdict(rep, dbr.factorizable);
  } else if (kind == "coadjoint_correspondence") {
    const LieAlgebra& g = b.algebra(ctx.str("algebra"));
    const MatrixQ E = ctx.op("operator");
    const MatrixQ S = b.form(ctx.str("form")).matrix;
    CoadjointDirection dir;
    MatrixQ in;
    if (ctx.has("K")) {
      dir = CoadjointDirection::K_to_B;
      in = ctx.op("K");
    } else if (ctx.has("B")) {
      dir = CoadjointDirection::B_to_K;
      in = ctx.op("B");
    } else {
      throw EnlError(ErrorKind::ValidationError,
                     ctx.where + ": provide \"K\" or \"B\"");
    }
    CorrespondenceResult res = coadjoint_correspondence(g, E, S, in, dir);
    put_output(rep, "operators", task_name + "_out",
               on_matrix_json(ctx.str("algebra"), res.out));
    apply_verdict(rep, res.verdict);
  } else if (kind == "double") {
    Bialgebra bia = ctx.bialgebra();
    DoubleResult dr = drinfeld_double(bia);
    put_output(rep, "lie_algebras", task_name + "_d", algebra_to_json(dr.d));
    put_output(rep, "bilinear_forms", task_name + "_S",
               on_matrix_json(task_name + "_d", dr.S));
    if (dr.Ehat) {
      put_output(rep, "operators", task_name + "_E",
                 on_matrix_json(task_name + "_d", *dr.Ehat));
      QuasiResult quasi = double_quasitriangular(bia);
      put_output(rep, "rmatrices", task_name + "_r",
                 on_matrix_json(task_name + "_d", quasi.r));
      put_output(rep, "lie_algebras", task_name + "_dstar",
                 algebra_to_json(quasi.dual_r));
      apply_verdict(rep, quasi.verdict);
    }
  } else if (kind == "bicross") {
    auto [d, Ehat] = bicrossed_product(b.matched_pair(ctx.str("matched_pair")).mp);
    put_output(rep, "lie_algebras", task_name + "_g", algebra_to_json(d));
    if (Ehat) {
      put_output(rep, "operators", task_name + "_E",
                 on_matrix_json(task_name + "_g", *Ehat));
    }
  } else if (kind == "semidirect") {
    const Representation& r = b.representation(ctx.str("representation")).rep;
    auto [d, Ehat] = semidirect_sum(r.algebra, ctx.op("operator"), r);
    put_output(rep, "lie_algebras", task_name + "_g", algebra_to_json(d));
    put_output(rep, "operators", task_name + "_E",
               on_matrix_json(task_name + "_g", Ehat));
  } else if (kind == "descendent") {
    if (ctx.has("relative_rb")) {
      DescendentENL des = descendent_enl(ctx.relrb(), ctx.op("operator"));
      put_output(rep, "lie_algebras", task_name + "_W", algebra_to_json(des.W));
      put_output(rep, "operators", task_name + "_T",
                 on_matrix_json(task_name + "_W", des.T));
      apply_verdict(rep, des.hom);
    } else {
      LieAlgebra d = descendent_bracket(b.algebra(ctx.str("algebra")),
                                        ctx.op("operator"),
                                        ctx.rational("weight"));
      put_output(rep, "lie_algebras", task_name + "_g", algebra_to_json(d));
    }
  } else if (kind == "hierarchy") {
    const int levels = ctx.integer("levels");
    if (ctx.has("bialgebra")) {
      apply_leveled(rep, bialgebra_hierarchy(ctx.bialgebra(), levels));
    } else {
      const LieAlgebra& g = b.algebra(ctx.str("algebra"));
      auto family = hierarchy(g, ctx.op("operator"), levels);
      std::vector<Verdict> vs;
      for (size_t k = 0; k < family.size(); ++k) {
        const std::string suffix = std::to_string(k + 1);
        put_output(rep, "lie_algebras", task_name + "_g" + suffix,
                   algebra_to_json(family[k].first));
        put_output(rep, "operators", task_name + "_E" + suffix,
                   on_matrix_json(ctx.str("algebra"), family[k].second));
        vs.push_back(check_lie(family[k].first));
      }
      apply_leveled(rep, vs);
    }
  } else if (kind == "rk_lift") {
    LiftResult lr = lift_r_from_relrb(ctx.relrb(), ctx.op("operator"));
    put_output(rep, "lie_algebras", task_name + "_d", algebra_to_json(lr.dbl));
    put_output(rep, "operators", task_name + "_E",
               on_matrix_json(task_name + "_d", lr.Ehat));
    put_output(rep, "rmatrices", task_name + "_r",
               on_matrix_json(task_name + "_d", lr.rK));
    apply_verdict(rep, lr.verdict);
  } else if (kind == "canonical_r") {
    CanonicalR cr = canonical_r_prelie(b.prelie(ctx.str("prelie")),
                                       ctx.op("operator"));
    put_output(rep, "lie_algebras", task_name + "_d", algebra_to_json(cr.dbl));
    put_output(rep, "operators", task_name + "_E",
               on_matrix_json(task_name + "_d", cr.Ehat));
    put_output(rep, "rmatrices", task_name + "_r",
               on_matrix_json(task_name + "_d", cr.r));
    apply_verdict(rep, cr.verdict);
  } else if (kind == "centroid") {
    const std::string gname = ctx.str("algebra");
    std::vector<MatrixQ> basis = centroid_basis(b.algebra(gname));
    for (size_t k = 0; k < basis.size(); ++k) {
      put_output(rep, "operators", task_name + "_" + std::to_string(k),
                 on_matrix_json(gname, basis[k]));
    }
    rep.detail = std::to_string(basis.size()) + " operators";
  } else if (kind == "dualize") {
    LieAlgebra gstar = dualize(b.cobracket(ctx.str("cobracket")).delta);
    put_output(rep, "lie_algebras", task_name + "_g", algebra_to_json(gstar));
  } else if (kind == "deform") {
    if (ctx.has("matched_pair")) {
      const MatchedPairEntry& entry = b.matched_pair(ctx.str("matched_pair"));
      DeformedMatchedPair dm = deform_matched_pair(entry.mp);
      put_output(rep, "lie_algebras", task_name + "_g",
                 algebra_to_json(dm.deformed.g));
      put_output(rep, "lie_algebras", task_name + "_h",
                 algebra_to_json(dm.deformed.h));
      OrderedJson body = OrderedJson::object();
      body["g"] = task_name + "_g";
      body["h"] = task_name + "_h";
      OrderedJson rho = OrderedJson::array();
      for (const MatrixQ& m : dm.deformed.rho) rho.push_back(matrix_to_json(m));
      body["rho"] = std::move(rho);
      OrderedJson mu = OrderedJson::array();
      for (const MatrixQ& m : dm.deformed.mu) mu.push_back(matrix_to_json(m));
      body["mu"] = std::move(mu);
      if (dm.deformed.Eg) {
        put_output(rep, "operators", task_name + "_Eg",
                   on_matrix_json(task_name + "_g", *dm.deformed.Eg));
        body["Eg"] = task_name + "_Eg";
      }
      if (dm.deformed.Eh) {
        put_output(rep, "operators", task_name + "_Eh",
                   on_matrix_json(task_name + "_h", *dm.deformed.Eh));
        body["Eh"] = task_name + "_Eh";
      }
      put_output(rep, "matched_pairs", task_name + "_mp", std::move(body));
      apply_verdict(rep, dm.iso);
    } else {
      LieAlgebra d = deformed_bracket(b.algebra(ctx.str("algebra")),
                                      ctx.op("operator"),
                                      parse_deform_mode(ctx.str("mode"),
                                                        ctx.where));
      put_output(rep, "lie_algebras", task_name + "_g", algebra_to_json(d));
    }
  } else {
    throw EnlError(ErrorKind::UnknownTask,
                   ctx.where + ": unknown kind \"" + kind + "\"");
  }
}

} // namespace

Report run_task(const Bundle& b, const std::string& name) {
  const TaskEntry* task = nullptr;
  for (const auto& [key, entry] : b.tasks) {
    if (key == name) {
      task = &entry;
      break;
    }
  }
  if (!task) {
    throw EnlError(ErrorKind::UnknownTask,
                   "task \"" + name + "\" is not declared");
  }

  Report rep;
  rep.name = name;
  rep.display = render_display(task->kind, task->params);
  TaskCtx ctx{b, task->params, "task " + name};

  const auto start = std::chrono::steady_clock::now();
  try {
    dispatch(b, task->kind, ctx, rep);
  } catch (const EnlError& e) {
    rep.status = Report::Status::Error;
    rep.code = error_kind_name(e.kind());
    rep.detail = e.what();
  }
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

std::vector<Report> run_all(const Bundle& b) {
  std::vector<Report> out;
  for (const auto& [name, task] : b.tasks) out.push_back(run_task(b, name));
  return out;
}

namespace {

const char* status_str(Report::Status s) {
  switch (s) {
    case Report::Status::Pass: return "PASS";
    case Report::Status::Fail: return "FAIL";
    default: return "ERROR";
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}

std::string witness_text(const Witness& w) {
  std::string out;
  if (!w.names.empty()) {
    out += " witness=[" + join(w.names) + "]";
  } else if (!w.indices.empty()) {
    std::vector<std::string> parts;
    for (int i : w.indices) parts.push_back(std::to_string(i));
    out += " witness=[" + join(parts) + "]";
  }
  out += " got=" + w.lhs + " expected=" + w.rhs;
  return out;
}

} // namespace

std::string emit_report(const std::vector<Report>& reports,
                        ReportFormat format, bool timings) {
  if (format == ReportFormat::text) {
    std::string out;
    for (const Report& r : reports) {
      out += status_str(r.status);
      out += " ";
      out += r.display;
      if (r.status == Report::Status::Fail && r.witness) {
        out += witness_text(*r.witness);
      }
      if (r.status == Report::Status::Error) {
        out += " " + r.code + ": " + r.detail;
      }
      if (timings) out += " wall_ms=" + std::to_string(r.wall_ms);
      out += "\n";
    }
    return out;
  }

  OrderedJson arr = OrderedJson::array();
  for (const Report& r : reports) {
    OrderedJson obj = OrderedJson::object();
    obj["name"] = r.name;
    obj["display"] = r.display;
    obj["status"] = r.status == Report::Status::Pass   ? "pass"
                    : r.status == Report::Status::Fail ? "fail"
                                                       : "error";
    obj["code"] = r.code;
    if (r.witness) {
      OrderedJson w = OrderedJson::object();
      w["indices"] = r.witness->indices;
      w["names"] = r.witness->names;
      w["got"] = r.witness->lhs;
      w["expected"] = r.witness->rhs;
      obj["witness"] = std::move(w);
    } else {
      obj["witness"] = nullptr;
    }
    obj["detail"] = r.detail;
    obj["outputs"] = r.outputs;
    if (timings) obj["wall_ms"] = r.wall_ms;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

int report_exit_code(const std::vector<Report>& reports) {
  bool any_fail = false;
  for (const Report& r : reports) {
    if (r.status == Report::Status::Error) return 2;
    if (r.status == Report::Status::Fail) any_fail = true;
  }
  return any_fail ? 1 : 0;
}

Bundle merge_outputs(const Bundle& b, const Report& report) {
  OrderedJson j = OrderedJson::parse(serialize_bundle(b));
  for (const auto& [section, entries] : report.outputs.items()) {
    if (!j.contains(section)) j[section] = OrderedJson::object();
    for (const auto& [key, def] : entries.items()) {
      if (j[section].contains(key)) {
        throw EnlError(ErrorKind::ValidationError,
                       "output \"" + key + "\" collides with an existing \"" +
                           section + "\" entry");
      }
      j[section][key] = def;
    }
  }
  return parse_bundle(j.dump());
}

} // namespace enl
