#pragma once

#include <json.hpp>

#include "resolab/decay.hpp"
#include "resolab/hardy.hpp"
#include "resolab/resonances.hpp"

namespace resolab::json {

using nlohmann::json;

inline constexpr int schema_version = 1;

json complex_to(cplx z);
json poly_to(const Poly& p);
json ratfun_to(const RatFun& r);
json ratmat_to(const RatMat& m);
json matrix_to(const CMatrix& m);
json vector_to(const CVector& v);
json pole_to(const PoleRecord& p);

json validation_to(const ValidationReport& r);
json conditions_to(const ConditionsReport& r);
json resonance_to(const ResonanceRecord& r);
json search_to(const ResonanceSearch& s);
json lemma_to(const LemmaReport& r);
json nogo_to(const NoGoReport& r);
json bases_to(const SubspaceBases& b);
json eigen_to(const EigenReport& r);
json resolvent_to(const ResolventReport& r);

}  // namespace resolab::json
