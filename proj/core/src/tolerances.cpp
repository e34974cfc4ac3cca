#include "resolab/tolerances.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>

namespace resolab {

namespace {

Tolerances& defaults() {
  static Tolerances tol;
  return tol;
}

std::atomic<std::size_t> near_cancellations{0};

bool verbose() {
  static const bool v = std::getenv("RESOLAB_VERBOSE") != nullptr;
  return v;
}

}  // namespace

Tolerances Tolerances::scaled(double f) const {
  Tolerances t = *this;
  t.trim *= f;
  t.gcd *= f;
  t.root *= f;
  t.cluster *= f;
  t.pole *= f;
  t.alg *= f;
  t.real *= f;
  return t;
}

const Tolerances& default_tolerances() { return defaults(); }

void set_default_tolerances(const Tolerances& tol) { defaults() = tol; }

std::size_t near_cancellation_count() { return near_cancellations.load(); }

void note_near_cancellation(cplx zero, cplx pole) {
  near_cancellations.fetch_add(1, std::memory_order_relaxed);
  if (verbose()) {
    std::clog << "resolab: cancelled zero " << zero << " against pole " << pole
              << " (distance " << std::abs(zero - pole) << ")\n";
  }
}

}  // namespace resolab
