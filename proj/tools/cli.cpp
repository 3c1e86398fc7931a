#include "lieinv/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lieinv/enveloping.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/expression_parser.hpp"
#include "lieinv/families.hpp"
#include "lieinv/normalization.hpp"

namespace lieinv::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Failure {
  int code;
  std::string kind;
  std::string message;
  std::string detail;
};

[[noreturn]] void fail(int code, std::string kind, std::string message, std::string detail = {}) {
  throw Failure{code, std::move(kind), std::move(message), std::move(detail)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<std::uint32_t> parse_order(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (const auto& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v < 1) throw std::invalid_argument(part);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      fail(kInputError, "input", "--order: expected comma-separated positive integers, got '" + part + "'");
    }
  }
  return out;
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    if (part == "+" || part == "1" || part == "+1") {
      out.push_back(1);
    } else if (part == "-" || part == "-1") {
      out.push_back(-1);
    } else {
      fail(kInputError, "input", "--signs: expected +/- entries, got '" + part + "'");
    }
  }
  return out;
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, Rational> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) fail(kInputError, "input", "--param: expected NAME=VALUE, got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

LieAlgebra load_checked(const std::string& path) {
  LieAlgebra alg = load_algebra(path);
  const auto report = validate(alg);
  if (!report.ok()) {
    fail(kCheckFailed, "jacobi", path + ": Jacobi identity fails for " + std::to_string(report.violations.size()) +
                                     " component(s)",
         report.to_string());
  }
  return alg;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LIE_INV_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    fail(kInputError, "input", std::string("LIE_INV_SEED: expected a nonnegative integer, got '") + env + "'");
  }
  return 0;
}

std::string display_name(const LieAlgebra& alg, const std::string& fallback) {
  return alg.name().empty() ? fallback : alg.name();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// --- subcommands -----------------------------------------------------------

void cmd_validate(const std::string& path, std::ostream& out) {
  const LieAlgebra alg = load_checked(path);
  out << "ok: " << display_name(alg, path) << ", dim " << alg.dim() << ", " << alg.bracket_count()
      << " nonzero brackets\n";
}

void cmd_info(const LieAlgebra& alg, const std::string& label, bool json, std::ostream& out) {
  const auto profile = coadjoint_profile(alg);
  const auto names = alg.coordinate_names();
  std::vector<std::string> center_text;
  for (const auto& v : profile.center_basis) {
    // Shown as the element sum c_i e_i, written with basis names.
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!s.empty()) s += v[i] < 0 ? " - " : " + ";
      else if (v[i] < 0) s += "-";
      const Rational mag = v[i] < 0 ? Rational(-v[i]) : v[i];
      if (mag != 1) s += to_string(mag) + "*";
      s += alg.basis()[i];
    }
    center_text.push_back(s);
  }
  if (json) {
    ojson j;
    j["schema"] = "1";
    j["algebra"] = label;
    j["dim"] = alg.dim();
    j["basis"] = alg.basis();
    j["brackets"] = alg.bracket_count();
    j["rank"] = profile.rank;
    j["n_invariants"] = profile.n_invariants;
    j["center"] = center_text;
    j["parameters"] = profile.aut_param_count;
    out << j.dump(2) << "\n";
    return;
  }
  out << "algebra: " << label << "\n";
  out << "dim: " << alg.dim() << "\n";
  out << "basis:";
  for (const auto& b : alg.basis()) out << " " << b;
  out << "\n";
  out << "nonzero brackets: " << alg.bracket_count() << "\n";
  for (const auto& [ij, terms] : alg.upper_brackets()) {
    std::string s;
    for (const auto& t : terms) {
      const bool neg = t.c < 0;
      const Rational mag = neg ? Rational(-t.c) : t.c;
      if (!s.empty()) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      if (mag != 1) s += to_string(mag) + "*";
      s += alg.basis_name(t.k);
    }
    out << "  [" << alg.basis_name(ij.first) << ", " << alg.basis_name(ij.second) << "] = " << s << "\n";
  }
  out << "center: " << (center_text.empty() ? "0" : "span{");
  for (std::size_t i = 0; i < center_text.size(); ++i) out << (i ? ", " : "") << center_text[i];
  out << (center_text.empty() ? "" : "}") << "\n";
  out << "coadjoint rank: " << profile.rank << "\n";
  out << "N_g: " << profile.n_invariants << "\n";
  out << "group parameters: " << profile.aut_param_count << "\n";
}

void cmd_lifted(const LieAlgebra& alg, const std::string& label, const std::string& order_text,
                const std::string& signs_text, bool json, std::ostream& out) {
  const auto order = order_text.empty() ? std::vector<std::uint32_t>{} : parse_order(order_text);
  const auto signs = signs_text.empty() ? std::vector<int>{} : parse_signs(signs_text);
  const auto lifted = inner_automorphism_matrix(alg, order, signs);
  const auto names = alg.coordinate_names();
  const std::size_t n = alg.dim();
  if (json) {
    ojson j;
    j["schema"] = "1";
    j["algebra"] = label;
    j["order"] = lifted.generator_order;
    j["signs"] = lifted.signs;
    j["parameters"] = lifted.params;
    ojson units = ojson::object();
    for (const auto& [k, q] : lifted.exp_denominators) units["v" + std::to_string(k)] = q;
    j["units"] = units;
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < n; ++r) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(lifted.B(r, c).to_string(names));
      rows.push_back(row);
    }
    j["B"] = rows;
    ojson exprs = ojson::array();
    for (const auto& e : lifted.exprs) exprs.push_back(e.to_string(names));
    j["lifted"] = exprs;
    out << j.dump(2) << "\n";
    return;
  }
  out << "algebra: " << label << "\n";
  out << "order:";
  for (auto i : lifted.generator_order) out << " " << i;
  out << "\nsigns:";
  for (auto s : lifted.signs) out << " " << (s > 0 ? "+" : "-");
  out << "\nparameters:";
  for (auto k : lifted.params) out << " t" << k;
  out << "\n";
  for (const auto& [k, q] : lifted.exp_denominators) {
    out << "v" << k << " = exp(" << (q == 1 ? "t" + std::to_string(k) : "t" + std::to_string(k) + "/" + std::to_string(q))
        << ")\n";
  }
  out << "B(theta):\n";
  for (std::size_t r = 0; r < n; ++r) {
    out << "  [";
    for (std::size_t c = 0; c < n; ++c) out << (c ? ", " : "") << lifted.B(r, c).to_string(names);
    out << "]\n";
  }
  out << "lifted invariants:\n";
  for (std::size_t j = 0; j < n; ++j) out << "  I" << j + 1 << " = " << lifted.exprs[j].to_string(names) << "\n";
}

ojson trace_json(const InvariantBasis& basis, const VarNames& names) {
  ojson steps = ojson::array();
  for (const auto& s : basis.trace.steps) {
    ojson j;
    j["kind"] = s.kind == StepKind::Affine ? "affine" : "multiplicative";
    j["equation"] = s.equation_index;
    j["variable"] = names.name(s.solved_variable);
    j["constant"] = to_string(s.constant);
    if (s.kind == StepKind::Multiplicative) j["exponent"] = s.exponent;
    j["solution"] = s.solution.to_string(names);
    ojson a = ojson::array();
    for (const auto& p : s.assumptions)
      if (!p.is_constant()) a.push_back(p.to_string(names));
    j["assumptions"] = a;
    steps.push_back(j);
  }
  return steps;
}

std::string step_text(const NormalizationStep& s, const VarNames& names) {
  std::ostringstream os;
  if (s.kind == StepKind::Affine) {
    os << "I" << s.equation_index << " = " << to_string(s.constant) << " gives " << names.name(s.solved_variable)
       << " = " << s.solution.to_string(names);
  } else {
    os << "I" << s.equation_index << " = " << to_string(s.constant) << " gives " << names.name(s.solved_variable);
    if (s.exponent != 1) os << "^" << s.exponent;
    os << " = " << s.solution.to_string(names);
  }
  std::vector<std::string> a;
  for (const auto& p : s.assumptions)
    if (!p.is_constant()) a.push_back(p.to_string(names));
  if (!a.empty()) {
    os << "  (assuming ";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i] << " != 0";
    os << ")";
  }
  return os.str();
}

int print_basis(const InvariantBasis& basis, const std::string& label, bool json, std::ostream& out) {
  const auto names = basis.algebra.coordinate_names();
  if (json) {
    ojson j;
    j["schema"] = "1";
    j["algebra"] = label;
    j["dim"] = basis.algebra.dim();
    j["rank"] = basis.profile_rank;
    j["n_invariants"] = basis.expected_count;
    ojson inv = ojson::array();
    for (const auto& f : basis.invariants) inv.push_back(f.to_string(names));
    j["invariants"] = inv;
    j["trace"] = trace_json(basis, names);
    ojson all = ojson::array();
    for (const auto& s : basis.trace.steps)
      for (const auto& p : s.assumptions)
        if (!p.is_constant()) all.push_back(p.to_string(names));
    j["assumptions"] = all;
    ojson lattice = ojson::array();
    for (const auto& m : basis.trace.lattice_moves) {
      ojson row = ojson::array();
      for (const auto& e : m) row.push_back(e.get_si());
      lattice.push_back(row);
    }
    j["lattice_moves"] = lattice;
    ojson residual = ojson::array();
    for (const auto& r : basis.trace.residual_exprs) residual.push_back(r.to_string(names));
    j["residuals"] = residual;
    j["rho"] = basis.rho;
    j["stalled"] = basis.stalled;
    j["jacobian_rank"] = basis.certificate.jacobian_rank;
    j["certified"] = basis.certified;
    out << j.dump(2) << "\n";
    return basis.certified ? kOk : kCheckFailed;
  }
  out << "algebra: " << label << " (dim " << basis.algebra.dim() << ")\n";
  out << "coadjoint rank: " << basis.profile_rank << ", N_g = " << basis.expected_count << "\n";
  if (!basis.trace.steps.empty()) {
    out << "normalization:\n";
    for (std::size_t i = 0; i < basis.trace.steps.size(); ++i)
      out << "  " << i + 1 << ". " << step_text(basis.trace.steps[i], names) << "\n";
  }
  if (!basis.trace.lattice_moves.empty()) out << "unit combinations: " << basis.trace.lattice_moves.size() << "\n";
  if (basis.invariants.empty()) {
    out << "no invariants (N_g = " << basis.expected_count << ")\n";
  } else {
    out << "invariants:\n";
    for (std::size_t i = 0; i < basis.invariants.size(); ++i)
      out << "  F" << i + 1 << " = " << basis.invariants[i].to_string(names) << "\n";
  }
  if (basis.stalled) {
    out << "stalled; residual lifted invariants:\n";
    for (const auto& r : basis.trace.residual_exprs) out << "  " << r.to_string(names) << "\n";
  }
  out << "rho: " << basis.rho << "\n";
  out << "certified: " << bool_text(basis.certified) << "\n";
  return basis.certified ? kOk : kCheckFailed;
}

InvariantBasis compute_basis(const LieAlgebra& alg, std::size_t max_steps, std::uint64_t seed, bool polynomial) {
  auto basis = normalize(inner_automorphism_matrix(alg), NormalizeOptions{max_steps, seed});
  if (polynomial && basis.certified) basis = polynomialize(basis);
  return basis;
}

int cmd_verify(const LieAlgebra& alg, const std::string& label, const std::vector<std::string>& texts, bool json,
               std::ostream& out) {
  const auto names = alg.coordinate_names();
  std::vector<PowerProduct> fs;
  for (const auto& t : texts) {
    try {
      fs.push_back(parse_power_product(t, names));
    } catch (const ParseError& e) {
      fail(kInputError, "parse", "'" + t + "': " + e.what(), "  " + t + "\n  " + std::string(e.offset(), ' ') + "^");
    }
    if (fs.back().depends_on_kind(VarKind::GroupParam) || fs.back().depends_on_kind(VarKind::ExpUnit))
      fail(kInputError, "input", "'" + t + "' involves group parameters");
  }
  const auto cert = certify_basis(fs, alg);
  if (json) {
    ojson j;
    j["schema"] = "1";
    j["algebra"] = label;
    ojson items = ojson::array();
    for (std::size_t l = 0; l < fs.size(); ++l) {
      ojson item;
      item["expression"] = fs[l].to_string(names);
      ojson res = ojson::array();
      for (std::size_t i = 0; i < cert.residuals[l].size(); ++i) {
        if (cert.residuals[l][i].is_zero()) continue;
        res.push_back({{"generator", alg.basis_name(static_cast<std::uint32_t>(i + 1))},
                       {"residual", cert.residuals[l][i].to_string(names)}});
      }
      item["invariant"] = res.empty();
      item["residuals"] = res;
      items.push_back(item);
    }
    j["checks"] = items;
    j["jacobian_rank"] = cert.jacobian_rank;
    j["expected_count"] = cert.expected_count;
    j["passed"] = cert.passed;
    out << j.dump(2) << "\n";
    return cert.passed ? kOk : kCheckFailed;
  }
  out << "algebra: " << label << "\n";
  for (std::size_t l = 0; l < fs.size(); ++l) {
    const bool zero = all_zero(cert.residuals[l]);
    out << "F" << l + 1 << " = " << fs[l].to_string(names) << ": " << (zero ? "invariant" : "not invariant") << "\n";
    for (std::size_t i = 0; i < cert.residuals[l].size(); ++i) {
      if (cert.residuals[l][i].is_zero()) continue;
      out << "  X_" << alg.basis_name(static_cast<std::uint32_t>(i + 1)) << " F" << l + 1 << " = "
          << cert.residuals[l][i].to_string(names) << "\n";
    }
  }
  out << "jacobian rank: " << cert.jacobian_rank << "\n";
  out << "expected count (N_g): " << cert.expected_count << "\n";
  out << "certified: " << bool_text(cert.passed) << "\n";
  return cert.passed ? kOk : kCheckFailed;
}

int cmd_casimir(const LieAlgebra& alg, const std::string& label, bool raw, std::uint64_t seed, std::ostream& out) {
  const auto basis = compute_basis(alg, 1000, seed, true);
  const auto names = alg.coordinate_names();
  out << "algebra: " << label << "\n";
  if (!basis.certified) {
    out << "invariant basis not certified; no operators produced\n";
    return kCheckFailed;
  }
  if (basis.invariants.empty()) {
    out << "no invariants (N_g = 0)\n";
    return kOk;
  }
  bool all_commute = true;
  for (std::size_t i = 0; i < basis.invariants.size(); ++i) {
    const auto& f = basis.invariants[i];
    out << "F" << i + 1 << " = " << f.to_string(names) << "\n";
    if (!f.is_polynomial()) {
      out << "  rational invariant; symmetrization not applied\n";
      continue;
    }
    const NcPolynomial sym = symmetrize(f);
    const NcPolynomial shown = raw ? sym : pbw_reduce(sym, alg);
    out << "  C" << i + 1 << " = " << shown.to_string(alg.basis()) << "\n";
    const auto residuals = commutes_with_generators(sym, alg);
    const bool ok = std::all_of(residuals.begin(), residuals.end(), [](const NcPolynomial& p) { return p.is_zero(); });
    all_commute = all_commute && ok;
    out << "  commutes with all generators: " << bool_text(ok) << "\n";
  }
  return all_commute ? kOk : kCheckFailed;
}

GammaMatrix standard_rows(std::size_t n) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t p = 1; p < n; ++p) {
    std::vector<Rational> row(n);
    row[p - 1] = 1;
    row[n - 1] = -1;
    rows.push_back(std::move(row));
  }
  return GammaMatrix(n, std::move(rows));
}

std::string gamma_text(const GammaMatrix& g) {
  std::string s;
  for (const auto& row : g.rows()) {
    s += "  (";
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? ", " : "") + to_string(row[i]);
    s += ")\n";
  }
  return s;
}

int cmd_family(const std::string& kind, std::size_t n, const std::string& gamma_file, bool theorem, bool json,
               std::uint64_t seed, std::ostream& out) {
  if (n < 2 || n > 7) fail(kInputError, "input", "--n must be between 2 and 7");
  LieAlgebra alg;
  std::optional<GammaMatrix> gamma;
  if (kind == "t0") {
    alg = build_t0(n);
    gamma = GammaMatrix(n, {});
  } else if (kind == "st") {
    alg = build_st(n);
    gamma = standard_rows(n);
  } else if (kind == "t") {
    alg = build_t(n);
    gamma = standard_rows(n);
  } else {
    if (gamma_file.empty()) fail(kInputError, "input", "family tgamma needs --gamma-file");
    gamma = load_gamma(gamma_file);
    if (gamma->n() != n) fail(kInputError, "input", "gamma file has n = " + std::to_string(gamma->n()));
    alg = build_tgamma(n, *gamma);
  }
  const std::string label = alg.name();
  const auto basis = compute_basis(alg, 1000, seed, true);
  int code = basis.certified ? kOk : kCheckFailed;

  std::optional<ReducedGamma> reduced;
  std::vector<PowerProduct> theorem_fs;
  std::optional<Certificate> theorem_cert;
  LieAlgebra theorem_alg;
  if (theorem) {
    reduced = reduce_gamma(*gamma);
    theorem_alg = build_tgamma(n, reduced->gamma);
    theorem_fs = theorem_basis(n, *reduced).all();
    if (kind == "t") {
      // t(n) is the reduced st(n) plus a central element.
      auto basis_names = theorem_alg.basis();
      basis_names.push_back("z");
      LieAlgebra with_z(theorem_alg.dim() + 1, basis_names);
      for (const auto& [ij, terms] : theorem_alg.upper_brackets())
        for (const auto& t : terms) with_z.add_bracket(ij.first, ij.second, t.k, t.c);
      with_z.set_name(label);
      theorem_alg = with_z;
      theorem_fs.emplace_back(RationalExpression::variable(Variable::x(static_cast<std::uint32_t>(with_z.dim()))));
    }
    theorem_cert = certify_basis(theorem_fs, theorem_alg);
    if (!theorem_cert->passed) code = kCheckFailed;
  }

  const auto names = alg.coordinate_names();
  if (json) {
    ojson j;
    j["schema"] = "1";
    j["family"] = kind;
    j["n"] = n;
    j["algebra"] = label;
    j["dim"] = alg.dim();
    j["n_invariants"] = basis.expected_count;
    ojson inv = ojson::array();
    for (const auto& f : basis.invariants) inv.push_back(f.to_string(names));
    j["invariants"] = inv;
    j["certified"] = basis.certified;
    if (theorem) {
      ojson t;
      ojson rows = ojson::array();
      for (const auto& row : reduced->gamma.rows()) {
        ojson r = ojson::array();
        for (const auto& q : row) r.push_back(to_string(q));
        rows.push_back(r);
      }
      t["reduced_gamma"] = rows;
      t["s_prime"] = reduced->s_prime;
      t["k_values"] = reduced->k_values;
      ojson exprs = ojson::array();
      const auto tnames = theorem_alg.coordinate_names();
      for (const auto& f : theorem_fs) exprs.push_back(f.to_string(tnames));
      t["basis"] = exprs;
      t["certified"] = theorem_cert->passed;
      j["theorem_basis"] = t;
    }
    out << j.dump(2) << "\n";
    return code;
  }
  out << "family: " << label << ", dim " << alg.dim() << "\n";
  if (gamma && gamma->s() > 0 && kind == "tgamma") out << "gamma (trace-free):\n" << gamma_text(*gamma);
  out << "N_g: " << basis.expected_count << "\n";
  out << "engine invariants:\n";
  if (basis.invariants.empty()) out << "  (none)\n";
  for (std::size_t i = 0; i < basis.invariants.size(); ++i)
    out << "  F" << i + 1 << " = " << basis.invariants[i].to_string(names) << "\n";
  out << "certified: " << bool_text(basis.certified) << "\n";
  if (theorem) {
    out << "determinant basis";
    if (reduced->gamma.s() > 0) {
      out << " (reduced gamma, s' = " << reduced->s_prime;
      if (!reduced->k_values.empty()) {
        out << ", k =";
        for (auto k : reduced->k_values) out << " " << k;
      }
      out << "):\n" << gamma_text(reduced->gamma);
    } else {
      out << ":\n";
    }
    const auto tnames = theorem_alg.coordinate_names();
    if (theorem_fs.empty()) out << "  (none)\n";
    for (std::size_t i = 0; i < theorem_fs.size(); ++i)
      out << "  G" << i + 1 << " = " << theorem_fs[i].to_string(tnames) << "\n";
    out << "determinant basis certified: " << bool_text(theorem_cert->passed) << "\n";
  }
  return code;
}

void cmd_catalog_list(std::ostream& out) {
  for (const auto& name : catalog_names()) {
    std::string params;
    if (name == "abelian" || name == "t0" || name == "t" || name == "st") params = "  --param n=N (default 3, at most 7)";
    if (name == "g4.8") params = "  --param b=B (default -1)";
    out << name << params << "\n";
  }
}

void cmd_catalog_show(const std::string& name, const std::vector<std::string>& params, std::ostream& out) {
  const auto p = parse_params(params);
  LieAlgebra alg;
  try {
    alg = catalog_algebra(name, p);
  } catch (const InvalidGamma& e) {
    fail(kInputError, "input", e.what());
  }
  out << algebra_to_json(alg) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of Lie algebras by normalization", "lie-inv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string file;
  bool json = false;
  std::optional<std::uint64_t> seed;

  auto* validate_cmd = app.add_subcommand("validate", "Check an algebra file and the Jacobi identity");
  validate_cmd->add_option("file", file, "Algebra JSON file")->required();

  auto* info_cmd = app.add_subcommand("info", "Center, coadjoint rank and invariant count");
  info_cmd->add_option("file", file, "Algebra JSON file")->required();
  info_cmd->add_flag("--json", json, "Machine-readable output");

  std::string order_text, signs_text;
  auto* lifted_cmd = app.add_subcommand("lifted", "Print B(theta) and the lifted invariants");
  lifted_cmd->add_option("file", file, "Algebra JSON file")->required();
  lifted_cmd->add_option("--order", order_text, "Generator order, e.g. 1,2,3,4");
  lifted_cmd->add_option("--signs", signs_text, "Parameter signs, e.g. +,+,+,-");
  lifted_cmd->add_flag("--json", json, "Machine-readable output");

  std::size_t max_steps = 1000;
  bool polynomial = false;
  auto* inv_cmd = app.add_subcommand("invariants", "Compute a certified basis of invariants");
  inv_cmd->add_option("file", file, "Algebra JSON file")->required();
  inv_cmd->add_flag("--json", json, "Machine-readable output");
  inv_cmd->add_option("--max-steps", max_steps, "Bound on normalization steps");
  inv_cmd->add_option("--seed", seed, "Seed of the genericity witness (default: LIE_INV_SEED or 0)");
  inv_cmd->add_flag("--polynomial", polynomial, "Clear denominators that are products of basis invariants");

  std::vector<std::string> expressions;
  auto* verify_cmd = app.add_subcommand("verify", "Certify user-supplied invariants");
  verify_cmd->add_option("file", file, "Algebra JSON file")->required();
  verify_cmd->add_option("--invariant", expressions, "Expression in x1..xn (repeatable)")->required();
  verify_cmd->add_flag("--json", json, "Machine-readable output");

  bool raw = false;
  auto* casimir_cmd = app.add_subcommand("casimir", "Symmetrized Casimir operators from polynomial invariants");
  casimir_cmd->add_option("file", file, "Algebra JSON file")->required();
  casimir_cmd->add_flag("--raw", raw, "Skip PBW reduction");
  casimir_cmd->add_option("--seed", seed, "Seed of the genericity witness");

  std::string kind;
  std::size_t n = 0;
  std::string gamma_file;
  bool emit_theorem = false;
  auto* family_cmd = app.add_subcommand("family", "Triangular families t0, t, st and tgamma");
  family_cmd->add_option("kind", kind, "t0 | t | st | tgamma")->required()->check(CLI::IsMember({"t0", "t", "st", "tgamma"}));
  family_cmd->add_option("--n", n, "Matrix size")->required();
  family_cmd->add_option("--gamma-file", gamma_file, "Gamma matrix JSON (tgamma only)");
  family_cmd->add_flag("--emit-theorem-basis", emit_theorem, "Also print the closed-form determinant basis");
  family_cmd->add_flag("--json", json, "Machine-readable output");
  family_cmd->add_option("--seed", seed, "Seed of the genericity witness");

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in algebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog names");
  std::string show_name;
  std::vector<std::string> params;
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Print a catalog algebra as JSON");
  show_cmd->add_option("name", show_name, "Catalog name")->required();
  show_cmd->add_option("--param", params, "Parameter NAME=VALUE (repeatable)");

  std::vector<std::string> argv_store{"lie-inv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (validate_cmd->parsed()) {
      cmd_validate(file, out);
      return kOk;
    }
    if (catalog_cmd->parsed()) {
      if (list_cmd->parsed()) cmd_catalog_list(out);
      if (show_cmd->parsed()) cmd_catalog_show(show_name, params, out);
      return kOk;
    }
    if (family_cmd->parsed()) return cmd_family(kind, n, gamma_file, emit_theorem, json, resolve_seed(seed), out);

    const LieAlgebra alg = load_checked(file);
    const std::string label = display_name(alg, file);
    if (info_cmd->parsed()) {
      cmd_info(alg, label, json, out);
      return kOk;
    }
    if (lifted_cmd->parsed()) {
      cmd_lifted(alg, label, order_text, signs_text, json, out);
      return kOk;
    }
    if (inv_cmd->parsed()) {
      return print_basis(compute_basis(alg, max_steps, resolve_seed(seed), polynomial), label, json, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(alg, label, expressions, json, out);
    if (casimir_cmd->parsed()) return cmd_casimir(alg, label, raw, resolve_seed(seed), out);
  } catch (const Failure& f) {
    err << "error[" << f.kind << "]: " << f.message << "\n" << f.detail;
    if (!f.detail.empty() && f.detail.back() != '\n') err << "\n";
    return f.code;
  } catch (const UnsupportedSpectrum& e) {
    err << "error[unsupported]: " << e.what() << "\n";
    return kUnsupported;
  } catch (const NotNilpotent& e) {
    err << "error[unsupported]: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InvalidRational& e) {
    err << "error[input]: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error[input]: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidGamma& e) {
    err << "error[gamma]: " << e.what() << "\n";
    return kInputError;
  } catch (const IndexOutOfRange& e) {
    err << "error[input]: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error[internal]: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace lieinv::cli
