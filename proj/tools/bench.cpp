// Times the serial reference scans against the parallel kernels on the
// workloads that dominate real runs, and checks both modes agree.
#include <chrono>
#include <cstdio>
#include <string>

#include "heis/cocycle.hpp"
#include "heis/projrep.hpp"

using namespace heis;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int failures = 0;

template <typename F>
void row(const char* name, F run) {
  const auto t0 = Clock::now();
  const auto serial = run(scan::Mode::serial);
  const double ts = ms_since(t0);
  const auto t1 = Clock::now();
  const auto parallel = run(scan::Mode::parallel);
  const double tp = ms_since(t1);
  const bool match = serial == parallel;
  if (!match) ++failures;
  std::printf("%-34s %10.1f %10.1f %7.2fx  %s\n", name, ts, tp,
              tp > 0 ? ts / tp : 0.0, match ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("%-34s %10s %10s %8s  %s\n", "workload", "serial/ms",
              "parallel/ms", "speedup", "agree");

  // Cocycle law scan: n^3 triples on a 144 element group.
  {
    FinAbGroup a({12, 12});
    CoeffContext qz(CoeffContext::divisible(1));
    Pairing p(a, qz,
              {CoeffVec{{QZ()}}, CoeffVec{{QZ(1, 12)}}, CoeffVec{{QZ()}},
               CoeffVec{{QZ()}}});
    Cocycle c = Cocycle::bimult(p);
    row("verify_cocycle  Z/12 x Z/12", [&](scan::Mode m) {
      const CocycleCheck chk = verify_cocycle(c, m);
      return chk.ok();
    });
  }

  // Exhaustive refinement search that never finds a match, so the whole
  // candidate space is visited: 4^7 functions on a 8 element group.
  {
    FinAbGroup a({2, 4});
    CoeffContext f4(CoeffContext::finite({4}));
    Pairing p(a, f4,
              {CoeffVec{{QZ()}}, CoeffVec{{QZ()}}, CoeffVec{{QZ()}},
               CoeffVec{{QZ(1, 4)}}});
    Cocycle c = Cocycle::bimult(p);
    row("brute_refinement  Z/2 x Z/4", [&](scan::Mode m) {
      return brute_refinement(c, 4, m).has_value();
    });
  }

  // Full cocycle table enumeration: 4^9 candidate tables on Z/2 x Z/2.
  {
    FinAbGroup a({2, 2});
    CoeffContext f4(CoeffContext::finite({4}));
    row("enumerate_cocycles  Z/2 x Z/2", [&](scan::Mode m) {
      return enumerate_cocycles(a, f4, m).size();
    });
  }

  // Homomorphism law over all 65536 pairs of 16-dimensional matrices.
  {
    FinAbGroup a({16});
    CoeffContext f16(CoeffContext::finite({16}));
    Pairing p(a, f16, {CoeffVec{{QZ(1, 16)}}});
    HeisenbergGroup h{Cocycle::bimult(p)};
    RepTable rho = induced_rep(h);
    row("rep law  |H| = 256, dim 16", [&](scan::Mode m) {
      return !rho.law_violation(m).has_value();
    });
  }

  if (failures) {
    std::printf("%d workload(s) disagreed between modes\n", failures);
    return 1;
  }
  return 0;
}
