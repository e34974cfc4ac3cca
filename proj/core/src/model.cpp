#include "resolab/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <fstream>
#include <sstream>

#include "resolab/errors.hpp"
#include "resolab/json_io.hpp"

namespace resolab {

using Json = nlohmann::json;
namespace jio = resolab::json;

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const InvariantCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate_model(const FriedrichsModel& m, const Tolerances& tol) {
  ValidationReport rep;
  {
    InvariantCheck c{"shape", true, 0.0, ""};
    if (m.dim_k <= 0 || m.dim_e <= 0) {
      c.passed = false;
      c.detail = "dim_k and dim_e must be positive";
    } else if (m.h_e.rows() != m.dim_e || m.h_e.cols() != m.dim_e) {
      c.passed = false;
      c.detail = "h_e must be dim_e x dim_e";
    } else if (m.coupling.rows() != m.dim_k || m.coupling.cols() != m.dim_e) {
      c.passed = false;
      c.detail = "coupling must be dim_k x dim_e";
    }
    rep.checks.push_back(c);
    if (!c.passed) return rep;
  }
  {
    const double d = (m.h_e - m.h_e.adjoint()).norm();
    rep.checks.push_back({"hermitian", d <= 1e-12, d, "||h_e - h_e^*||_F"});
  }
  {
    double min_im = std::numeric_limits<double>::infinity();
    cplx worst{};
    for (const auto& e : m.coupling.entries())
      for (const cplx p : e.poles())
        if (std::abs(p.imag()) < min_im) {
          min_im = std::abs(p.imag());
          worst = p;
        }
    InvariantCheck c{"real_regular", min_im > tol.real, min_im, "min |Im pole| of the coupling"};
    if (!c.passed) {
      std::ostringstream os;
      os << "non-integrable coupling: real pole at " << worst.real();
      c.detail = os.str();
    }
    rep.checks.push_back(c);
  }
  {
    int worst = -1000;
    for (const auto& e : m.coupling.entries())
      if (!e.is_zero()) worst = std::max(worst, e.degree());
    const bool ok = worst <= -1;
    rep.checks.push_back({"decay", ok, static_cast<double>(worst),
                          "max over entries of deg(num) - deg(den); must be <= -1"});
  }
  return rep;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path, what); }

cplx parse_complex(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(path, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Poly parse_poly(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of [re, im] coefficients");
  std::vector<cplx> c;
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(parse_complex(j[k], path + "/" + std::to_string(k)));
  return Poly(std::move(c));
}

int parse_dim(const Json& doc, const char* key) {
  const std::string path = std::string("/") + key;
  if (!doc.contains(key)) fail(path, "missing field");
  const auto& v = doc[key];
  if (!v.is_number_integer() || v.get<long>() <= 0) fail(path, "expected a positive integer");
  return v.get<int>();
}

}  // namespace

FriedrichsModel parse_model(std::istream& in, const Tolerances& tol) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "expected an object");
  static const std::vector<std::string> known{"name", "dim_k", "dim_e", "h_e", "coupling", "schema_version"};
  for (const auto& [k, v] : doc.items()) {
    (void)v;
    if (std::find(known.begin(), known.end(), k) == known.end()) fail("/" + k, "unknown field");
  }
  FriedrichsModel m;
  if (!doc.contains("name") || !doc["name"].is_string()) fail("/name", "expected a string");
  m.name = doc["name"].get<std::string>();
  m.dim_k = parse_dim(doc, "dim_k");
  m.dim_e = parse_dim(doc, "dim_e");

  if (!doc.contains("h_e")) fail("/h_e", "missing field");
  const auto& h = doc["h_e"];
  if (!h.is_array() || h.size() != static_cast<std::size_t>(m.dim_e)) fail("/h_e", "expected dim_e rows");
  m.h_e = CMatrix(m.dim_e, m.dim_e);
  for (int i = 0; i < m.dim_e; ++i) {
    const auto& row = h[static_cast<std::size_t>(i)];
    const std::string rp = "/h_e/" + std::to_string(i);
    if (!row.is_array() || row.size() != static_cast<std::size_t>(m.dim_e)) fail(rp, "expected dim_e entries");
    for (int j = 0; j < m.dim_e; ++j)
      m.h_e(i, j) = parse_complex(row[static_cast<std::size_t>(j)], rp + "/" + std::to_string(j));
  }

  if (!doc.contains("coupling")) fail("/coupling", "missing field");
  const auto& c = doc["coupling"];
  if (!c.is_array() || c.size() != static_cast<std::size_t>(m.dim_k)) fail("/coupling", "expected dim_k rows");
  m.coupling = RatMat(m.dim_k, m.dim_e);
  for (int i = 0; i < m.dim_k; ++i) {
    const auto& row = c[static_cast<std::size_t>(i)];
    const std::string rp = "/coupling/" + std::to_string(i);
    if (!row.is_array() || row.size() != static_cast<std::size_t>(m.dim_e)) fail(rp, "expected dim_e entries");
    for (int j = 0; j < m.dim_e; ++j) {
      const auto& ent = row[static_cast<std::size_t>(j)];
      const std::string ep = rp + "/" + std::to_string(j);
      if (!ent.is_object()) fail(ep, "expected {\"num\": ..., \"den\": ...}");
      for (const auto& [k, v] : ent.items()) {
        (void)v;
        if (k != "num" && k != "den") fail(ep + "/" + k, "unknown field");
      }
      if (!ent.contains("num")) fail(ep + "/num", "missing field");
      if (!ent.contains("den")) fail(ep + "/den", "missing field");
      const Poly num = parse_poly(ent["num"], ep + "/num");
      const Poly den = parse_poly(ent["den"], ep + "/den");
      if (den.is_zero()) fail(ep + "/den", "zero denominator");
      m.coupling(i, j) = RatFun::from_coeffs(num, den, tol);
    }
  }
  return m;
}

FriedrichsModel load_model(std::istream& in, const Tolerances& tol) {
  FriedrichsModel m = parse_model(in, tol);
  const ValidationReport rep = validate_model(m, tol);
  for (const auto& chk : rep.checks)
    if (!chk.passed) {
      std::ostringstream os;
      os << chk.detail << " (measured " << chk.slack << ")";
      throw InvariantError(chk.name, os.str());
    }
  return m;
}

FriedrichsModel load_model_file(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open model file '" + path + "'");
  return load_model(in, tol);
}

std::string save_model(const FriedrichsModel& m) {
  Json doc;
  doc["schema_version"] = 1;
  doc["name"] = m.name;
  doc["dim_k"] = m.dim_k;
  doc["dim_e"] = m.dim_e;
  Json h = Json::array();
  for (int i = 0; i < m.dim_e; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim_e; ++j) row.push_back(jio::complex_to(m.h_e(i, j)));
    h.push_back(row);
  }
  doc["h_e"] = h;
  Json c = Json::array();
  for (int i = 0; i < m.dim_k; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim_e; ++j) row.push_back(jio::ratfun_to(m.coupling(i, j)));
    c.push_back(row);
  }
  doc["coupling"] = c;
  return doc.dump(2);
}

namespace {

FriedrichsModel one_dim(const std::string& name, double lambda0, double gamma) {
  FriedrichsModel m;
  m.name = name;
  m.dim_k = m.dim_e = 1;
  m.h_e = CMatrix::Constant(1, 1, lambda0);
  m.coupling = RatMat::scalar(RatFun::pole_term(gamma / std::sqrt(pi), -I, 1));
  return m;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"paper-1d", "oneD-gamma", "twoK-oneE", "conjugate-pair"}; }

FriedrichsModel builtin_model(const std::string& name, const BuiltinParams& p) {
  if (name == "paper-1d") return one_dim(name, p.lambda0, 1.0);
  if (name == "oneD-gamma") return one_dim(name, p.lambda0, std::sqrt(p.gamma2));
  if (name == "twoK-oneE") {
    FriedrichsModel m;
    m.name = name;
    m.dim_k = 2;
    m.dim_e = 1;
    m.h_e = CMatrix::Constant(1, 1, p.lambda0);
    m.coupling = RatMat(2, 1);
    m.coupling(0, 0) = RatFun::pole_term(p.c1 / std::sqrt(pi), -I, 1);
    m.coupling(1, 0) = RatFun::pole_term(p.c2 / std::sqrt(pi), -2.0 * I, 1);
    return m;
  }
  if (name == "conjugate-pair") {
    // M = π^{-1/2} (v/(λ+i) + u/(λ+2i)) with u^*v = -3/2 |v|², so M(i)^* v = 0:
    // the M#M residue at -i vanishes and S keeps a coupling pole at -i,
    // conjugate to its upper pole at i.
    FriedrichsModel m;
    m.name = name;
    m.dim_k = 2;
    m.dim_e = 1;
    m.h_e = CMatrix::Constant(1, 1, p.lambda0);
    m.coupling = RatMat(2, 1);
    const double s = 1.0 / std::sqrt(pi);
    m.coupling(0, 0) = RatFun::pole_term(s, -I, 1) + RatFun::pole_term(-1.5 * s, -2.0 * I, 1);
    m.coupling(1, 0) = RatFun::pole_term(s, -2.0 * I, 1);
    return m;
  }
  throw UnknownName("unknown builtin model '" + name + "'");
}

FriedrichsModel resolve_model(const std::string& spec, const Tolerances& tol) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) return builtin_model(spec.substr(prefix.size()));
  return load_model_file(spec, tol);
}

}  // namespace resolab
