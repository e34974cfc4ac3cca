// Prints the Λ/N convergence table of the grid semigroup defect
// ||Z(t)e - e^{-itζ}e|| / ||e|| for Breit-Wigner states, as markdown.

#include <cstdio>

#include "resolab/decay.hpp"
#include "resolab/hardy.hpp"

using namespace resolab;

int main() {
  std::printf("| alpha | Lambda | log2 N | step | Z(0.5) defect | Z(1) defect | Q idempotence | warning |\n");
  std::printf("|---|---|---|---|---|---|---|---|\n");
  for (const double alpha : {0.1, 0.5}) {
    const BreitWigner bw{1.0, alpha};
    const RatFun e = bw_amplitude(bw);
    for (const double half : {50.0, 100.0, 200.0, 400.0})
      for (const int log2n : {12, 14, 16, 18}) {
        const GridSpec g{half, std::size_t{1} << log2n};
        const GridFunction f = GridFunction::sample(e, g);
        double d[2];
        int k = 0;
        for (const double t : {0.5, 1.0})
          d[k++] = (characteristic_semigroup(t, f) - f * survival_full(bw, t)).norm() / f.norm();
        const GridFunction q = hardy_project(f);
        const double idem = (hardy_project(q) - q).norm() / f.norm();
        std::printf("| %.1f | %.0f | %d | %.2e | %.2e | %.2e | %.2e | %s |\n", alpha, half, log2n, g.step(), d[0], d[1],
                    idem, sampling_warning(f) ? "yes" : "no");
      }
  }
}
