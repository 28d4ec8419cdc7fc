// How far the detection efficiency can be pushed: lowering the splitter
// reflectivity and repeating approaches 1/2; chaining weak coupling stages
// approaches 1.

#include <cstdio>

#include "ifm/ifm.hpp"

int main() {
  using namespace ifm;

  std::printf("repeated low-reflectivity protocol:\n");
  std::printf("%10s %12s %14s\n", "R", "efficiency", "rounds");
  for (double r : {0.5, 0.25, 0.1, 0.01, 0.001}) {
    const ProtocolOutcome out = repeated_ev(r);
    std::printf("%10g %12.6f %14.1f\n", r, out.efficiency, out.rounds_expected);
  }

  std::printf("\nchained weak couplings (object present):\n");
  std::printf("%8s %12s %12s\n", "N", "P(safe)", "efficiency");
  for (std::int64_t n : {1, 5, 10, 50, 100, 1000}) {
    const ProtocolOutcome out = zeno_ifm({n, true});
    std::printf("%8lld %12.6f %12.6f\n", static_cast<long long>(n),
                out.distribution.prob("safe"), out.efficiency);
  }
  return 0;
}
