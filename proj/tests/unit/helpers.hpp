#pragma once

#include <algorithm>
#include <vector>

#include "resolab/poly.hpp"

namespace testing {

using resolab::cplx;

// sort by (re, im) to line up against the oracle tables
inline std::vector<cplx> sorted(std::vector<cplx> v) {
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

inline std::vector<cplx> root_values(const std::vector<resolab::Root>& r) {
  std::vector<cplx> v;
  for (const auto& x : r) v.push_back(x.value);
  return sorted(v);
}

}  // namespace testing
