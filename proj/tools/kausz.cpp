#include "kausz/classifier.hpp"
#include "kausz/cone.hpp"
#include "kausz/curves.hpp"
#include "kausz/grassmann.hpp"
#include "kausz/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace kausz;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<int> triple;
  std::string space = "T";
  std::string format = "json";
  std::string out;
  std::string matrix_file;
  std::string divisor;
  std::string curve;
  int n_max = 12;
  int symbolic_n_max = 10;
  int l = -1;
  bool strict = false;
  bool te = false;
};

Params triple(const Options& o) {
  if (o.triple.size() != 3) throw UsageError("expected three integers s p n");
  return Params::make(o.triple[0], o.triple[1], o.triple[2]);
}

json params_json(const Params& q) { return {{"s", q.s}, {"p", q.p}, {"n", q.n}}; }

json class_json(const DivisorClass& cls) {
  json out = json::object();
  for (const auto& symbol : spanning_symbols(cls.params, cls.space)) {
    const Rational c = cls[symbol];
    if (c != 0) out[symbol.str()] = to_string(c);
  }
  return out;
}

json reduced_json(const DivisorClass& cls) {
  const auto symbols = basis(cls.params, cls.space);
  const RationalVector x = reduced_coordinates(cls);
  json out = json::object();
  for (std::size_t i = 0; i < symbols.size(); ++i) out[symbols[i].str()] = to_string(x(i));
  return out;
}

json id_json(const CurveId& id) {
  json out = {{"family", id.family_name()}, {"l", id.l}, {"name", id.str()}};
  switch (id.family) {
    case CurveId::Family::gamma: break;
    case CurveId::Family::zeta: out["j"] = id.j; break;
    case CurveId::Family::zetaUV:
      out["k"] = id.k;
      out["u"] = id.u;
      out["v"] = id.v;
      break;
    default:
      out["m1"] = id.m1;
      out["m2"] = id.m2;
  }
  return out;
}

json optional_rational(const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); }

RationalMatrix read_matrix(const Options& o) {
  json doc;
  try {
    if (o.matrix_file.empty()) {
      doc = json::parse(std::cin);
    } else {
      std::ifstream in(o.matrix_file);
      if (!in) throw UsageError("cannot open " + o.matrix_file);
      doc = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty() || !doc[0].is_array()) throw UsageError("matrix must be a 2-D JSON array");
  RationalMatrix m(doc.size(), doc[0].size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_array() || doc[i].size() != doc[0].size()) throw UsageError("matrix rows differ in length");
    for (std::size_t j = 0; j < doc[i].size(); ++j) {
      const auto& e = doc[i][j];
      if (e.is_number_integer()) m(i, j) = Rational(e.get<long long>());
      else if (e.is_string()) m(i, j) = parse_rational(e.get<std::string>());
      else throw UsageError("matrix entries must be integers or \"a/b\" strings");
    }
  }
  return m;
}

template <class Scalar, class Show>
json matrix_json(const Matrix<Scalar>& m, Show show) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(show(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json rational_matrix_json(const RationalMatrix& m) {
  return matrix_json(m, [](const Rational& q) { return to_string(q); });
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out + "\n";
}

void require_json(const Options& o, const char* command) {
  if (o.format != "json") throw UsageError(std::string(command) + " only emits json");
}

// ---- subcommands ---------------------------------------------------------

json cmd_info(const Options& o) {
  const Params q = triple(o);
  const Normalization norm = normalize(q);
  const Params& z = norm.params;
  json trace = json::array();
  for (auto iso : norm.trace) trace.push_back(to_string(iso));
  const auto fib = fibration_report(z);
  json fibrations = json::array();
  for (const auto& f : fib.fibrations)
    fibrations.push_back({{"base", "G(" + std::to_string(f.base_p) + "," + std::to_string(f.base_n) + ")"},
                          {"fiber", params_json(Params::make(f.fiber_s, f.fiber_p, f.fiber_n))}});
  return {{"params", params_json(q)},
          {"r", q.r},
          {"normalized", q.normalized},
          {"normal_form", params_json(z)},
          {"trace", trace},
          {"dim_T", q.p * (q.n - q.p)},
          {"dim_M", q.p * (q.n - q.p) - 1},
          {"picard_rank_T", basis(z, Space::T).size()},
          {"picard_rank_M", basis(z, Space::M).size()},
          {"boundary_divisors", 2 * q.r},
          {"fibration", {{"case", fib.label}, {"maps", fibrations}}}};
}

json cmd_basis(const Options& o) {
  const Params q = triple(o);
  const Space space = parse_space(o.space);
  json symbols = json::array();
  for (const auto& symbol : basis(q, space)) symbols.push_back(symbol.str());
  json spanning = json::array();
  for (const auto& symbol : spanning_symbols(q, space)) spanning.push_back(symbol.str());
  return {{"params", params_json(q)}, {"space", to_string(space)}, {"basis", symbols}, {"rank", symbols.size()},
          {"spanning", spanning}};
}

json cmd_divisor(const Options& o) {
  const Params q = triple(o);
  const DivisorName name = DivisorName::parse(o.divisor);
  json out = {{"params", params_json(q)}, {"name", name.str()}, {"space", to_string(name.space())}};
  if (name.space() == Space::M) out["empty"] = m_named_divisor(q, name).empty;
  const DivisorClass cls = divisor(q, name);
  out["class"] = class_json(cls);
  out["reduced"] = reduced_json(cls);
  return out;
}

void cmd_curves(const Options& o, std::ostream& os) {
  const Params q = triple(o);
  if (o.format == "csv") {
    std::vector<std::string> header{"family", "l", "name", "lemma"};
    for (const auto& symbol : spanning_symbols(q, Space::T)) header.push_back(symbol.str());
    os << csv_row(header);
    for (const auto& c : catalog(q)) {
      std::vector<std::string> row{c.id.family_name(), std::to_string(c.id.l), "\"" + c.id.str() + "\"", c.lemma};
      for (int x : c.ivec) row.push_back(std::to_string(x));
      os << csv_row(row);
    }
    return;
  }
  json curves = json::array();
  for (const auto& c : catalog(q)) {
    json numbers = json::object();
    const auto symbols = spanning_symbols(q, Space::T);
    for (std::size_t i = 0; i < symbols.size(); ++i) numbers[symbols[i].str()] = c.ivec[i];
    json entry = {{"id", id_json(c.id)}, {"intersections", numbers}, {"lemma", c.lemma},
                  {"reference_antiK", optional_rational(c.ref_anti_k)}, {"reference_lemma", c.ref_lemma},
                  {"in_M", lies_in_M(c.id)}};
    if (!c.note.empty()) entry["note"] = c.note;
    curves.push_back(entry);
  }
  os << json{{"params", params_json(q)}, {"curves", curves}, {"count", curves.size()}}.dump(2) << "\n";
}

void cmd_curves_table(const Options& o, std::ostream& os) {
  const Params q = triple(o);
  std::vector<std::string> header{"family", "l", "params"};
  for (const auto& symbol : spanning_symbols(q, Space::T)) header.push_back(symbol.str());
  header.insert(header.end(), {"derived_antiK", "reference_antiK", "match"});
  os << csv_row(header);
  const auto degrees = anticanonical_degrees(q, Space::T);
  const auto curves = catalog(q);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    std::vector<std::string> row{curves[i].id.family_name(), std::to_string(curves[i].id.l),
                                 "\"" + q.str() + " " + curves[i].id.str() + "\""};
    for (int x : curves[i].ivec) row.push_back(std::to_string(x));
    row.push_back(to_string(degrees[i].derived));
    row.push_back(degrees[i].reference ? to_string(*degrees[i].reference) : "");
    row.push_back(degrees[i].match ? "true" : "false");
    os << csv_row(row);
  }
}

void cmd_intersect(const Options& o, std::ostream& os) {
  const Params q = triple(o);
  const DivisorName name = DivisorName::parse(o.divisor);
  const DivisorClass cls = divisor(q, name);
  std::vector<std::pair<CurveId, Rational>> rows;
  for (const auto& c : catalog(q)) {
    if (!o.curve.empty() && c.id.str() != o.curve) continue;
    if (cls.space == Space::T) rows.emplace_back(c.id, intersect(cls, c));
    else if (lies_in_M(c.id)) rows.emplace_back(c.id, intersect_on_M(cls, c));
  }
  if (!o.curve.empty() && rows.empty()) throw UsageError("no curve named " + o.curve + " on " + to_string(cls.space));
  if (o.format == "csv") {
    os << csv_row({"curve", "degree"});
    for (const auto& [id, d] : rows) os << csv_row({"\"" + id.str() + "\"", to_string(d)});
    return;
  }
  json out = json::array();
  for (const auto& [id, d] : rows) out.push_back({{"curve", id.str()}, {"degree", to_string(d)}});
  os << json{{"params", params_json(q)}, {"divisor", name.str()}, {"intersections", out}}.dump(2) << "\n";
}

json positivity_json(const PositivityReport& r) {
  auto names = [](const std::vector<CurveId>& ids) {
    json out = json::array();
    for (const auto& id : ids) out.push_back(id.str());
    return out;
  };
  return {{"params", params_json(r.params)},
          {"r", r.params.r},
          {"T", {{"curves", r.t_curves},
                 {"negative", names(r.negative)},
                 {"zero", names(r.zero)},
                 {"zero_set_expected", r.zero_set_expected},
                 {"verdict", r.t_verdict},
                 {"verdict_expected", r.t_verdict_expected}}},
          {"M", {{"curves", r.m_curves},
                 {"min_degree", optional_rational(r.m_min_degree)},
                 {"below_one", names(r.m_below_one)},
                 {"verdict", r.m_verdict}}},
          {"ok", r.ok}};
}

json cmd_positivity(const Options& o) {
  if (!o.triple.empty()) return positivity_json(positivity_verdict(triple(o)));
  json rows = json::array();
  bool ok = true;
  for (const auto& q : all_params(o.n_max, true)) {
    const auto report = positivity_verdict(q);
    ok = ok && report.ok;
    rows.push_back(positivity_json(report));
  }
  return {{"n_max", o.n_max}, {"reports", rows}, {"ok", ok}};
}

json cmd_cone(const Options& o) {
  const Params q = triple(o);
  const Space space = parse_space(o.space);
  const auto generators = effective_generators(q, space);
  if (!o.divisor.empty()) {
    const DivisorClass target = divisor(q, DivisorName::parse(o.divisor));
    if (target.space != space) throw UsageError("divisor lives on " + to_string(target.space));
    RationalMatrix a(basis(q, space).size(), generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) a.col(j) = reduced_coordinates(generators[j].cls);
    const RationalVector b = reduced_coordinates(target);
    const ConeMembership m = cone_membership(a, b);
    json out = {{"params", params_json(q)}, {"space", to_string(space)}, {"divisor", o.divisor},
                {"effective", m.member}, {"verified", verify_membership(a, b, m)}};
    if (m.member) {
      json lambda = json::object();
      for (std::size_t j = 0; j < generators.size(); ++j)
        if (m.lambda(j) != 0) lambda[generators[j].name] = to_string(m.lambda(j));
      out["combination"] = lambda;
    } else {
      json z = json::array();
      for (Eigen::Index i = 0; i < m.certificate.size(); ++i) z.push_back(to_string(m.certificate(i)));
      out["certificate"] = z;
    }
    return out;
  }
  const ExtremalReport r = extremal_report(q, space);
  json gens = json::object();
  for (const auto& g : generators) gens[g.name] = reduced_json(g.cls);
  return {{"params", params_json(q)},
          {"space", to_string(space)},
          {"generators", gens},
          {"extremal", r.rays},
          {"dropped_zero", r.dropped_zero},
          {"duplicates", r.duplicates},
          {"printed", r.printed ? json(*r.printed) : json(nullptr)},
          {"match", r.match},
          {"certificates_ok", r.certificates_ok}};
}

json cmd_aut(const Options& o) {
  const Params q = triple(o);
  const Space space = parse_space(o.space);
  const Normalization norm = normalize(q);
  const GroupDescriptor g = space == Space::T ? aut_T(q) : aut_M(q);
  json discrete = json::array();
  for (auto f : g.discrete) discrete.push_back(to_string(f));
  json trace = json::array();
  for (auto iso : norm.trace) trace.push_back(to_string(iso));
  return {{"space", to_string(space)},
          {"params", params_json(q)},
          {"normalized", params_json(norm.params)},
          {"trace", trace},
          {"case", g.case_label},
          {"connected", g.connected},
          {"discrete", discrete},
          {"model", g.model ? json(*g.model) : json(nullptr)},
          {"provenance", g.provenance}};
}

json cmd_plucker(const Options& o) {
  const RationalMatrix m = read_matrix(o);
  if (m.rows() > m.cols()) throw UsageError("need p <= n");
  const auto v = pluecker_vector(m);
  json coords = json::object();
  for (const auto& [index, value] : v.coords) coords[index.str()] = to_string(value);
  const RelationCheck check = pluecker_relations_check(v);
  json violations = json::array();
  for (const auto& rel : check.violations) violations.push_back({{"a", rel.a}, {"b", rel.b}, {"value", to_string(rel.value)}});
  return {{"p", v.p}, {"n", v.n}, {"coordinates", coords}, {"rank_deficient", v.rank_deficient},
          {"relations", check.relations}, {"relations_ok", check.ok}, {"violations", violations}};
}

json cmd_dual(const Options& o) {
  const RationalMatrix m = read_matrix(o);
  const RationalMatrix d = dual_point(m);
  return {{"input", rational_matrix_json(m)}, {"dual", rational_matrix_json(d)},
          {"orthogonal", RationalMatrix(m * d.transpose()).isZero()}};
}

json cmd_usd(const Options& o) {
  const RationalMatrix m = read_matrix(o);
  return {{"input", rational_matrix_json(m)}, {"usd", rational_matrix_json(usd_point(m))},
          {"sign", usd_sign(static_cast<int>(m.rows()))}};
}

json cmd_millecrepes(const Options& o) {
  const Params q = triple(o);
  require_normalized(q, "millecrepes");
  if (o.l < 0 || o.l > q.r) throw UsageError("--l must lie in [0, r]");
  const ChartIndex chart = main_chart(q, o.l);
  json out = {{"params", params_json(q)}, {"l", o.l}, {"chart", {{"rows", chart.rows}, {"cols", chart.cols}}},
              {"matrix", matrix_json(mille_crepes_matrix(q, chart), [](const Polynomial& f) { return f.str(); })}};
  if (o.te) {
    const TeReport r = verify_te(q, o.l);
    json entries = json::array();
    for (const auto& e : r.entries)
      entries.push_back({{"k", e.k}, {"expected", e.expected.str()}, {"computed", e.computed.str()},
                         {"sign", e.sign}, {"match", e.match}});
    out["te"] = {{"pivot_value", r.pivot_value.str()}, {"entries", entries}, {"ok", r.ok}};
  }
  return out;
}

json cmd_orbits(const Options& o) {
  const Params q = triple(o);
  json rows = json::array();
  for (const auto& sig : orbit_closures(q)) rows.push_back({{"plus", sig.plus}, {"minus", sig.minus}});
  return {{"params", params_json(q)}, {"r", q.r}, {"orbit_closures", rows}, {"count", rows.size()}};
}

json verify_json(const VerifyReport& report) {
  json checks = json::array();
  json known = json::array();
  for (const auto& c : report.checks) {
    json findings = json::array();
    for (const auto& f : c.findings) {
      json entry = {{"subject", f.subject}, {"detail", f.detail}};
      if (!f.known_id.empty()) entry["known"] = f.known_id;
      findings.push_back(entry);
    }
    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures(report.config.strict)},
                      {"known", c.known()}, {"passed", c.passed(report.config.strict)}, {"findings", findings}});
  }
  for (const auto& k : known_discrepancies())
    known.push_back({{"id", k.id}, {"check", k.check}, {"lemma", k.lemma}, {"curves", k.curves},
                     {"printed", k.printed}, {"derived", k.derived}, {"description", k.description}});
  const auto& c = report.config;
  return {{"config", {{"n_max", c.n_max}, {"symbolic_n_max", c.symbolic_n_max}, {"strict", c.strict},
                      {"seed", c.seed}, {"random_matrices", c.random_matrices}}},
          {"checks", checks},
          {"known_discrepancies", known},
          {"passed", report.passed()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection theory and symmetry of generalized Kausz compactifications"};
  app.require_subcommand(1);
  Options o;

  std::array<int, 3> raw{};
  std::vector<CLI::Option*> triple_options;
  auto add_triple = [&](CLI::App* sub, bool required = true) {
    for (int i = 0; i < 3; ++i) {
      auto* opt = sub->add_option(std::string(1, "spn"[i]), raw[i], i == 0 ? "the triple s p n" : "");
      if (required) opt->required();
      triple_options.push_back(opt);
    }
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_space = [&](CLI::App* sub) { sub->add_option("--space", o.space, "T or M")->check(CLI::IsMember({"T", "M"})); };
  auto add_matrix = [&](CLI::App* sub) { sub->add_option("--matrix", o.matrix_file, "JSON matrix file (default stdin)"); };

  auto* info = app.add_subcommand("info", "rank, dimensions, Picard ranks, fibration");
  auto* basis_cmd = app.add_subcommand("basis", "free basis of Pic");
  auto* divisor_cmd = app.add_subcommand("divisor", "expand a named divisor");
  auto* curves = app.add_subcommand("curves", "the T-invariant curve catalog");
  auto* table = curves->add_subcommand("table", "CSV of intersections and -K degrees");
  auto* intersect_cmd = app.add_subcommand("intersect", "pair a divisor with the catalog");
  auto* positivity = app.add_subcommand("positivity", "anticanonical positivity verdicts");
  auto* cone = app.add_subcommand("cone", "effective cone: extremal rays or membership");
  auto* aut = app.add_subcommand("aut", "automorphism group");
  auto* plucker = app.add_subcommand("plucker", "Plücker vector of a matrix");
  auto* dual = app.add_subcommand("dual", "dual representative");
  auto* usd = app.add_subcommand("usd", "column reversal");
  auto* mille = app.add_subcommand("millecrepes", "main chart matrix");
  auto* orbits = app.add_subcommand("orbits", "G-orbit closures");
  auto* verify = app.add_subcommand("verify", "run the verification sweep");

  for (auto* sub : {info, basis_cmd, divisor_cmd, intersect_cmd, cone, aut, mille, orbits}) add_triple(sub);
  add_triple(curves, false);
  add_triple(table);
  add_triple(positivity, false);
  for (auto* sub : {basis_cmd, cone, aut}) add_space(sub);
  for (auto* sub : {info, basis_cmd, divisor_cmd, curves, intersect_cmd, positivity, cone, aut, plucker, dual, usd,
                    mille, orbits, verify})
    add_format(sub);
  for (auto* sub : {plucker, dual, usd}) add_matrix(sub);
  divisor_cmd->add_option("name", o.divisor, "e.g. B_2, Dplus_1, antiK, KM")->required();
  intersect_cmd->add_option("divisor", o.divisor, "divisor name")->required();
  intersect_cmd->add_option("--curve", o.curve, "restrict to one curve, e.g. \"gamma(l=0)\"");
  cone->add_option("--divisor", o.divisor, "test membership of this divisor");
  positivity->add_option("--n-max", o.n_max, "sweep bound when no triple is given")->check(CLI::Range(2, 16));
  mille->add_option("--l", o.l, "chart index 0 <= l <= r")->required();
  mille->add_flag("--te", o.te, "also check the pivot-minor monomials");
  verify->add_option("--n-max", o.n_max, "sweep bound")->check(CLI::Range(2, 16));
  verify->add_option("--symbolic-n-max", o.symbolic_n_max, "bound for the symbolic chart sweep");
  verify->add_flag("--strict", o.strict, "treat known discrepancies as failures");
  app.add_option("--out", o.out, "write output to FILE");

  try {
    app.parse(argc, argv);
    std::size_t given = 0;
    for (auto* opt : triple_options) given += opt->count();
    if (given != 0 && given != 3) throw CLI::ValidationError("s p n", "give all three of s p n or none");
    if (given == 3) o.triple.assign(raw.begin(), raw.end());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    auto emit = [&](const json& j) { buffer << j.dump(2) << "\n"; };
    if (*info) require_json(o, "info"), emit(cmd_info(o));
    else if (*basis_cmd) require_json(o, "basis"), emit(cmd_basis(o));
    else if (*divisor_cmd) require_json(o, "divisor"), emit(cmd_divisor(o));
    else if (*table) cmd_curves_table(o, buffer);
    else if (*curves) cmd_curves(o, buffer);
    else if (*intersect_cmd) cmd_intersect(o, buffer);
    else if (*positivity) {
      require_json(o, "positivity");
      const json j = cmd_positivity(o);
      emit(j);
      status = j.at("ok").get<bool>() ? 0 : 1;
    } else if (*cone) require_json(o, "cone"), emit(cmd_cone(o));
    else if (*aut) require_json(o, "aut"), emit(cmd_aut(o));
    else if (*plucker) require_json(o, "plucker"), emit(cmd_plucker(o));
    else if (*dual) require_json(o, "dual"), emit(cmd_dual(o));
    else if (*usd) require_json(o, "usd"), emit(cmd_usd(o));
    else if (*mille) require_json(o, "millecrepes"), emit(cmd_millecrepes(o));
    else if (*orbits) require_json(o, "orbits"), emit(cmd_orbits(o));
    else if (*verify) {
      SweepConfig config;
      config.n_max = o.n_max;
      config.symbolic_n_max = std::min(o.symbolic_n_max, o.n_max);
      config.strict = o.strict;
      const VerifyReport report = run_verification(config);
      if (o.format == "csv") {
        buffer << csv_row({"check", "cases", "failures", "known", "passed"});
        for (const auto& c : report.checks)
          buffer << csv_row({c.name, std::to_string(c.cases), std::to_string(c.failures(config.strict)),
                             std::to_string(c.known()), c.passed(config.strict) ? "true" : "false"});
      } else {
        emit(verify_json(report));
      }
      status = report.passed() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    file << buffer.str();
  }
  return status;
}
