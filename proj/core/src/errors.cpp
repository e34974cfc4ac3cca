#include "resolab/errors.hpp"

#include <sstream>

namespace resolab {

namespace {
std::string fmt(cplx z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}
}  // namespace

PoleEvaluation::PoleEvaluation(cplx z, cplx pole)
    : Error("evaluation at pole: z=" + fmt(z) + " is within tolerance of pole " + fmt(pole)),
      point_(z),
      pole_(pole) {}

HolomorphicPoint::HolomorphicPoint(cplx z) : Error("holomorphic point: no pole at " + fmt(z)) {}

ConjugatePole::ConjugatePole(cplx zeta)
    : Error("conjugate pole, Lemma inapplicable: conj(" + fmt(zeta) + ") is a pole of S") {}

}  // namespace resolab
