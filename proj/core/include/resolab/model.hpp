#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "resolab/ratmat.hpp"

namespace resolab {

/// Finite-rank Friedrichs model H = M + Γ + Γ* on L²(R, K) ⊕ E, with
/// (Γe)(λ) = M(λ)e. `coupling` is the dim_k x dim_e matrix function M(·) and
/// `h_e` the restriction of the free Hamiltonian to E.
struct FriedrichsModel {
  std::string name;
  int dim_k = 0;
  int dim_e = 0;
  CMatrix h_e;
  RatMat coupling;
};

struct InvariantCheck {
  std::string name;
  bool passed = false;
  double slack = 0.0;  // measured violation (or margin) for the invariant
  std::string detail;
};

struct ValidationReport {
  std::vector<InvariantCheck> checks;
  bool ok() const;
  const InvariantCheck* find(const std::string& name) const;
};

/// Checks "hermitian", "real_regular", "decay" and "shape". Never throws.
ValidationReport validate_model(const FriedrichsModel& m, const Tolerances& tol = default_tolerances());

/// Parses the JSON model document. Throws SchemaError (with a JSON pointer)
/// for malformed documents and InvariantError for models failing validation.
FriedrichsModel load_model(std::istream& in, const Tolerances& tol = default_tolerances());
/// Schema checks only; the invariants are left to validate_model.
FriedrichsModel parse_model(std::istream& in, const Tolerances& tol = default_tolerances());
FriedrichsModel load_model_file(const std::string& path, const Tolerances& tol = default_tolerances());
std::string save_model(const FriedrichsModel& m);

struct BuiltinParams {
  double lambda0 = 1.0;
  double gamma2 = 0.1;  // oneD-gamma coupling strength |γ|²
  cplx c1 = 0.5;        // twoK-oneE
  cplx c2 = 0.5;
};

/// "paper-1d", "oneD-gamma", "twoK-oneE", and "conjugate-pair" (a dim_k=2
/// model whose scattering matrix has poles at both i and -i).
FriedrichsModel builtin_model(const std::string& name, const BuiltinParams& p = {});
std::vector<std::string> builtin_names();

/// "builtin:<name>" or a file path.
FriedrichsModel resolve_model(const std::string& spec, const Tolerances& tol = default_tolerances());

}  // namespace resolab
