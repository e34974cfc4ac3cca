#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "resolab/errors.hpp"
#include "resolab/json_io.hpp"

namespace resolab::cli {

namespace fs = std::filesystem;
using nlohmann::json;
namespace rj = resolab::json;

namespace {

struct RunConfig {
  std::string command;
  std::string model = "builtin:paper-1d";
  std::string region = "-10,10,-10,0";
  std::string t_grid;
  std::string out_dir;
  std::string format = "json";
  double tol_scale = 0.0;  // 0: take RESOLAB_TOL_SCALE or 1
  // decay / nogo
  double c = 1.0, alpha = 0.05;
  std::string density_json;
  // smatrix
  double sweep_range = 50.0;
  int sweep_n = 1000;
  // theorem2
  int n_max = 30;
  std::string check_eigen, k0, resolvent, g_pole, g_vector, case_req;
  bool no_grid = false;
  double grid_half_width = 200.0;
  int grid_log2n = 16;
  // example
  std::string example_name;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Options whose values may begin with '-' ("-i", "-2,2,-2,0").
const std::vector<std::string> signed_value_options{"--check-eigen", "--k0",     "--resolvent", "--g-pole",
                                                    "--g-vector",    "--region", "--c",         "--t-grid"};

std::vector<std::string> join_signed_values(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) {
    const std::string a = argv[k];
    const bool takes = std::find(signed_value_options.begin(), signed_value_options.end(), a) != signed_value_options.end();
    if (takes && k + 1 < argc && argv[k + 1][0] == '-') {
      args.push_back(a + "=" + argv[k + 1]);
      ++k;
    } else {
      args.push_back(a);
    }
  }
  return args;
}

std::vector<double> parse_list(const std::string& s, char sep) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("cannot parse number '" + item + "'");
    }
  }
  return v;
}

Region parse_region(const std::string& s) {
  const auto v = parse_list(s, ',');
  if (v.size() != 4) throw UsageError("--region expects re_min,re_max,im_min,im_max");
  return {v[0], v[1], v[2], v[3]};
}

// "log:a:b:n", "lin:a:b:n" or "t1,t2,..."
std::vector<double> parse_t_grid(const std::string& s) {
  for (const char* kind : {"log:", "lin:"}) {
    if (s.rfind(kind, 0) != 0) continue;
    const auto v = parse_list(s.substr(4), ':');
    if (v.size() != 3 || v[2] < 2) throw UsageError("--t-grid expects " + std::string(kind) + "a:b:n with n >= 2");
    const int n = static_cast<int>(v[2]);
    return std::string(kind) == "log:" ? logspace(v[0], v[1], n) : linspace(v[0], v[1], n);
  }
  return parse_list(s, ',');
}

cplx complex_flag(const std::string& name, const std::string& s) {
  try {
    return parse_complex(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

CVector parse_vector(const std::string& s) {
  std::vector<cplx> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) v.push_back(complex_flag("vector", item));
  CVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) out(static_cast<Eigen::Index>(k)) = v[k];
  return out;
}

json envelope(const RunConfig& cfg) { return {{"schema_version", rj::schema_version}, {"command", cfg.command}}; }

void write_file(const RunConfig& cfg, const std::string& name, const std::string& content) {
  if (cfg.out_dir.empty()) return;
  fs::create_directories(cfg.out_dir);
  std::ofstream f(fs::path(cfg.out_dir) / name, std::ios::binary);
  f << content;
  if (!f) throw Error("cannot write " + (fs::path(cfg.out_dir) / name).string());
}

void emit(const RunConfig& cfg, const json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  out << text;
  write_file(cfg, cfg.command + ".json", text);
}

FriedrichsModel load(const RunConfig& cfg) { return resolve_model(cfg.model); }

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  FriedrichsModel m;
  const std::string prefix = "builtin:";
  if (cfg.model.rfind(prefix, 0) == 0) {
    m = builtin_model(cfg.model.substr(prefix.size()));
  } else {
    std::ifstream in(cfg.model);
    if (!in) throw SchemaError("", "cannot open model file '" + cfg.model + "'");
    m = parse_model(in);
  }
  const ValidationReport rep = validate_model(m);
  json doc = envelope(cfg);
  doc["model"] = m.name;
  doc["validation"] = rj::validation_to(rep);
  emit(cfg, doc, out);
  return rep.ok() ? ok : analysis_failure;
}

int cmd_smatrix(const RunConfig& cfg, std::ostream& out) {
  const FriedrichsModel m = load(cfg);
  const SMatrix s = smatrix(m);
  const LivsicPair lp = livsic_pair(m);
  double worst = 0.0, worst_at = 0.0;
  json sweep = json::array();
  for (double l : linspace(-cfg.sweep_range, cfg.sweep_range, cfg.sweep_n)) {
    const double d = unitarity_defect(s.s, l);
    if (d > worst) {
      worst = d;
      worst_at = l;
    }
  }
  json up = json::array(), lo = json::array();
  for (const auto& p : s.poles_upper) up.push_back(rj::pole_to(p));
  for (const auto& p : s.poles_lower) lo.push_back(rj::pole_to(p));
  json doc = envelope(cfg);
  doc["model"] = m.name;
  doc["s"] = rj::ratmat_to(s.s);
  doc["poles_upper"] = up;
  doc["poles_lower"] = lo;
  doc["unitarity"] = {{"range", cfg.sweep_range}, {"points", cfg.sweep_n}, {"max_defect", worst}, {"at", worst_at}};
  doc["assembly_defect"] = coefficient_defect(s.s, smatrix_from_lower(m));
  doc["livsic"] = {{"upper", rj::ratmat_to(lp.upper)},
                   {"lower", rj::ratmat_to(lp.lower)},
                   {"continuation_defect", continuation_defect(lp)},
                   {"symmetry_defect", symmetry_coefficient_defect(lp)}};
  emit(cfg, doc, out);
  return worst <= 1e-8 ? ok : analysis_failure;
}

int cmd_poles(const RunConfig& cfg, std::ostream& out) {
  const FriedrichsModel m = load(cfg);
  const SMatrix s = smatrix(m);
  const ResonanceSearch r = find_resonances(m, parse_region(cfg.region));
  json up = json::array(), lo = json::array();
  for (const auto& p : s.poles_upper) up.push_back(rj::pole_to(p));
  for (const auto& p : s.poles_lower) lo.push_back(rj::pole_to(p));
  json doc = envelope(cfg);
  doc["model"] = m.name;
  doc["poles_upper"] = up;
  doc["poles_lower"] = lo;
  doc["search"] = rj::search_to(r);
  emit(cfg, doc, out);
  return r.audit_ok() ? ok : analysis_failure;
}

int cmd_lemma(const RunConfig& cfg, std::ostream& out) {
  const FriedrichsModel m = load(cfg);
  const SMatrix s = smatrix(m);
  const RatMat lplus = livsic_branch(m, Branch::upper);
  json reports = json::array();
  bool failed = false;
  for (const auto& p : s.poles_lower) {
    if (p.source.find("livsic_zero") == std::string::npos) {
      reports.push_back({{"zeta", rj::complex_to(p.location)}, {"skipped", "pole of the coupling, not a Livšic zero"}});
      continue;
    }
    try {
      const LemmaReport rep = verify_lemma(m, s, lplus, p.location);
      failed = failed || rep.verdict == "fail";
      reports.push_back(rj::lemma_to(rep));
    } catch (const ConjugatePole& e) {
      reports.push_back({{"zeta", rj::complex_to(p.location)}, {"error", e.what()}});
    }
  }
  json doc = envelope(cfg);
  doc["model"] = m.name;
  doc["lemma"] = reports;
  emit(cfg, doc, out);
  return failed ? analysis_failure : ok;
}

std::string fmt17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

int cmd_decay(const RunConfig& cfg, std::ostream& out) {
  const BreitWigner bw{cfg.c, cfg.alpha};
  bw_amplitude(bw);  // validates α
  const auto grid = parse_t_grid(cfg.t_grid.empty() ? "lin:0:20:41" : cfg.t_grid);
  RatFun density;
  const bool custom = !cfg.density_json.empty();
  if (custom) {
    std::ifstream in(cfg.density_json);
    if (!in) throw SchemaError("", "cannot open density file '" + cfg.density_json + "'");
    json d;
    try {
      d = json::parse(in);
    } catch (const json::parse_error& e) {
      throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }
    std::stringstream doc;
    doc << json{{"name", "density"}, {"dim_k", 1}, {"dim_e", 1}, {"h_e", {{{0.0, 0.0}}}}, {"coupling", {{d}}}};
    density = parse_model(doc).coupling(0, 0);
  }
  std::ostringstream csv;
  csv << (custom ? "t,ReA,ImA,P\n" : "t,ReA_full,ImA_full,P_full,ReA,ImA,P\n");
  json rows = json::array();
  for (double t : grid) {
    if (t < 0) throw UsageError("--t-grid must be nonnegative");
    if (custom) {
      const cplx a = truncated_survival_density(density, t);
      csv << fmt17(t) << ',' << fmt17(a.real()) << ',' << fmt17(a.imag()) << ',' << fmt17(std::norm(a)) << '\n';
      rows.push_back({{"t", t}, {"amplitude", rj::complex_to(a)}, {"P", std::norm(a)}});
    } else {
      const cplx f = survival_full(bw, t), a = truncated_survival(bw, t);
      const double p = std::exp(truncated_log_probability(bw, t));
      csv << fmt17(t) << ',' << fmt17(f.real()) << ',' << fmt17(f.imag()) << ',' << fmt17(std::norm(f)) << ','
          << fmt17(a.real()) << ',' << fmt17(a.imag()) << ',' << fmt17(p) << '\n';
      rows.push_back({{"t", t}, {"full", rj::complex_to(f)}, {"truncated", rj::complex_to(a)}, {"P", p}});
    }
  }
  write_file(cfg, "decay.csv", csv.str());
  if (cfg.format == "csv") {
    out << csv.str();
    return ok;
  }
  json doc = envelope(cfg);
  doc["c"] = bw.c;
  doc["alpha"] = bw.alpha;
  doc["state"] = custom ? "user density" : "normalized half-line Breit-Wigner";
  doc["samples"] = rows;
  emit(cfg, doc, out);
  return ok;
}

int cmd_nogo(const RunConfig& cfg, std::ostream& out) {
  const BreitWigner bw{cfg.c, cfg.alpha};
  const NoGoReport r = nogo_report(bw, parse_t_grid(cfg.t_grid.empty() ? "log:1e3:1e4:30" : cfg.t_grid));
  const std::string csv = nogo_csv(r);
  write_file(cfg, "nogo.csv", csv);
  if (cfg.format == "csv") {
    out << csv;
  } else {
    json doc = envelope(cfg);
    doc["nogo"] = rj::nogo_to(r);
    emit(cfg, doc, out);
  }
  return r.verdict == "non-exponential" ? ok : analysis_failure;
}

// k = M(μ)e for the Livšic zero μ
CVector eigen_vector_at(const FriedrichsModel& m, cplx mu) {
  const CMatrix e = livsic_kernel(m, mu);
  return m.coupling.eval(mu, default_tolerances()) * e.col(0);
}

int cmd_theorem2(const RunConfig& cfg, std::ostream& out) {
  const FriedrichsModel m = load(cfg);
  const SMatrix s = smatrix(m);
  const ConditionsReport cond = theorem2_conditions(s);
  json doc = envelope(cfg);
  doc["model"] = m.name;
  doc["conditions"] = rj::conditions_to(cond);
  SubspaceBases b;
  try {
    b = subspace_bases(m, s, cfg.n_max);
  } catch (const HypothesisViolation& e) {
    doc["error"] = e.what();
    emit(cfg, doc, out);
    return analysis_failure;
  }
  doc["bases"] = rj::bases_to(b);
  int code = ok;

  if (!cfg.check_eigen.empty()) {
    const cplx zeta = complex_flag("--check-eigen", cfg.check_eigen);
    CVector k0;
    std::string source = "user";
    if (!cfg.k0.empty()) {
      k0 = parse_vector(cfg.k0);
      if (k0.size() != m.dim_k) throw UsageError("--k0 needs dim_k components separated by ';'");
    } else {
      // a null vector of the case condition, else a generic vector
      const cplx zb = std::conj(zeta);
      CMatrix cond_matrix;
      if (const PoleRecord* p = find_pole(s, zb)) {
        Eigen::Index r = 0, c = 0;
        p->leading.cwiseAbs().maxCoeff(&r, &c);
        cond_matrix = (p->leading / p->leading(r, c)).adjoint();
      } else {
        cond_matrix = s.s.eval(zb, default_tolerances()).adjoint();
      }
      const CMatrix ns = null_space(cond_matrix, 1e-8, 1.0);
      if (ns.cols() > 0) {
        k0 = ns.col(0);
        source = "null vector of the case condition";
      } else {
        k0 = CVector::Zero(m.dim_k);
        k0(0) = 1.0;
        source = "generic (condition has no null vector)";
      }
    }
    EigenOptions opt;
    opt.grid_check = !cfg.no_grid;
    opt.grid = {cfg.grid_half_width, std::size_t{1} << cfg.grid_log2n};
    const EigenReport rep = eigenvector_check(m, s, b, zeta, k0, opt);
    json j = rj::eigen_to(rep);
    j["k0_source"] = source;
    doc["eigen"] = j;
    if (rep.orthogonal() != rep.algebraic_condition) code = analysis_failure;
  }

  if (!cfg.resolvent.empty()) {
    const cplx zeta = complex_flag("--resolvent", cfg.resolvent);
    cplx mu;
    if (!cfg.g_pole.empty()) {
      mu = complex_flag("--g-pole", cfg.g_pole);
    } else {
      const PoleRecord* best = nullptr;
      for (const auto& p : s.poles_lower)
        if (p.source.find("livsic_zero") != std::string::npos &&
            (!best || std::abs(p.location.imag()) < std::abs(best->location.imag())))
          best = &p;
      if (!best) throw HypothesisViolation("no resonance available to build a default g");
      mu = best->location;
    }
    const CVector k = cfg.g_vector.empty() ? eigen_vector_at(m, mu) : parse_vector(cfg.g_vector);
    if (k.size() != m.dim_k) throw UsageError("--g-vector needs dim_k components separated by ';'");
    RatMat g(m.dim_k, 1);
    for (int i = 0; i < m.dim_k; ++i) g(i, 0) = RatFun::pole_term(k(i), mu, 1);
    try {
      const ResolventReport rep = resolvent_construct(m, s, b, zeta, g, cfg.case_req);
      json j = rj::resolvent_to(rep);
      j["g"] = {{"pole", rj::complex_to(mu)}, {"vector", rj::vector_to(k)}};
      doc["resolvent"] = j;
      if (!rep.certificates_pass()) code = analysis_failure;
    } catch (const HypothesisViolation& e) {
      doc["resolvent"] = {{"zeta", rj::complex_to(zeta)}, {"error", e.what()}};
      code = analysis_failure;
    }
  }
  emit(cfg, doc, out);
  return code;
}

int cmd_example(const RunConfig& cfg, std::ostream& out) {
  const std::string text = save_model(builtin_model(cfg.example_name)) + "\n";
  out << text;
  write_file(cfg, cfg.example_name + ".json", text);
  return ok;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message, const std::string& path = "") {
  err << "resolab: " << message << '\n';
  json j{{"schema_version", rj::schema_version}, {"error", {{"type", kind}, {"message", message}}}};
  if (!path.empty()) j["error"]["path"] = path;
  err << j.dump() << '\n';
}

void apply_tolerance_scale(double flag) {
  double scale = flag;
  if (scale == 0.0) {
    scale = 1.0;
    if (const char* env = std::getenv("RESOLAB_TOL_SCALE")) {
      try {
        scale = std::stod(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("RESOLAB_TOL_SCALE is not a number: ") + env);
      }
    }
  }
  if (!(scale > 0)) throw UsageError("tolerance scale must be positive");
  static const Tolerances base = default_tolerances();
  set_default_tolerances(base.scaled(scale));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"resolab: resonances of finite-rank Friedrichs models"};
  app.require_subcommand(1);
  app.add_option("--tol-scale", cfg.tol_scale, "Global tolerance multiplier (default: RESOLAB_TOL_SCALE or 1)");
  app.add_option("--out-dir", cfg.out_dir, "Also write reports into this directory");

  auto model_opt = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "Model file or builtin:<name>")->capture_default_str();
  };
  auto* validate = app.add_subcommand("validate", "Check the model invariants");
  model_opt(validate);
  auto* sm = app.add_subcommand("smatrix", "Scattering matrix, poles and unitarity sweep");
  model_opt(sm);
  sm->add_option("--sweep-range", cfg.sweep_range, "Unitarity sweep over [-r, r]")->capture_default_str();
  sm->add_option("--sweep-n", cfg.sweep_n, "Unitarity sweep points")->capture_default_str();
  auto* poles = app.add_subcommand("poles", "Poles of S and resonances with an argument-principle audit");
  model_opt(poles);
  poles->add_option("--region", cfg.region, "re_min,re_max,im_min,im_max (im_max <= 0)")->capture_default_str();
  auto* lemma = app.add_subcommand("lemma", "Kernel/multiplicity check at every lower pole of S");
  model_opt(lemma);
  auto bw_opts = [&](CLI::App* sub, const char* grid_help) {
    sub->add_option("--c", cfg.c, "Resonance energy")->capture_default_str();
    sub->add_option("--alpha", cfg.alpha, "Half-width")->capture_default_str();
    sub->add_option("--t-grid", cfg.t_grid, grid_help);
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto* decay = app.add_subcommand("decay", "Full-line and half-line survival amplitudes");
  bw_opts(decay, "log:a:b:n, lin:a:b:n or a comma list (default lin:0:20:41)");
  decay->add_option("--density-json", cfg.density_json, "Rational half-line density {\"num\",\"den\"} instead of |e|²");
  auto* nogo = app.add_subcommand("nogo", "Non-exponential tail of the half-line survival probability");
  bw_opts(nogo, "log:a:b:n, lin:a:b:n or a comma list (default log:1e3:1e4:30)");
  auto* th = app.add_subcommand("theorem2", "Hypotheses, eigenvector and resolvent checks for the decay semigroup");
  model_opt(th);
  th->add_option("--n-max", cfg.n_max, "Basis cutoff")->capture_default_str();
  th->add_option("--check-eigen", cfg.check_eigen, "Candidate eigenvalue ζ in the lower half-plane");
  th->add_option("--k0", cfg.k0, "Eigenvector coefficient, components separated by ';'");
  th->add_option("--resolvent", cfg.resolvent, "Resolvent point ζ");
  th->add_option("--g-pole", cfg.g_pole, "Pole μ of the right-hand side g = k/(λ-μ)");
  th->add_option("--g-vector", cfg.g_vector, "Vector k of g (default M(μ)e)");
  th->add_option("--case", cfg.case_req, "Expected case a or b")->check(CLI::IsMember({"a", "b"}));
  th->add_flag("--no-grid", cfg.no_grid, "Skip the grid semigroup check");
  th->add_option("--grid-half-width", cfg.grid_half_width)->capture_default_str();
  th->add_option("--grid-log2n", cfg.grid_log2n)->capture_default_str()->check(CLI::Range(4, 24));
  auto* ex = app.add_subcommand("example", "Write a builtin model file");
  ex->add_option("name", cfg.example_name, "paper-1d, oneD-gamma, twoK-oneE or conjugate-pair")->required();

  std::vector<std::string> args = join_signed_values(argc, argv);
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return usage_error;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    apply_tolerance_scale(cfg.tol_scale);
    if (cfg.command == "validate") return cmd_validate(cfg, out);
    if (cfg.command == "smatrix") return cmd_smatrix(cfg, out);
    if (cfg.command == "poles") return cmd_poles(cfg, out);
    if (cfg.command == "lemma") return cmd_lemma(cfg, out);
    if (cfg.command == "decay") return cmd_decay(cfg, out);
    if (cfg.command == "nogo") return cmd_nogo(cfg, out);
    if (cfg.command == "theorem2") return cmd_theorem2(cfg, out);
    if (cfg.command == "example") return cmd_example(cfg, out);
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return usage_error;
  } catch (const SchemaError& e) {
    report_error(err, "schema", e.what(), e.path());
    return usage_error;
  } catch (const InvariantError& e) {
    report_error(err, "invariant", e.what());
    return usage_error;
  } catch (const DegenerateInput& e) {
    report_error(err, "input", e.what());
    return usage_error;
  } catch (const UnknownName& e) {
    report_error(err, "usage", e.what());
    return usage_error;
  } catch (const Error& e) {
    report_error(err, "analysis", e.what());
    return analysis_failure;
  }
  report_error(err, "usage", "unknown subcommand");
  return usage_error;
}

}  // namespace resolab::cli
