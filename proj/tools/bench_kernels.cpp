// Serial vs OpenMP band kernels: operator products and kappa pairings.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <utility>

#ifdef QTORUS_HAVE_OPENMP
#include <omp.h>
#endif

#include "qtorus/solid_torus.hpp"

using namespace qtorus;

namespace {

// Best of reps for each of two functions, run alternately so neither gets a warm start.
template <class F, class G>
std::pair<double, double> best_of(F&& f, G&& g, int reps) {
  auto once = [](auto&& h) {
    const auto t0 = std::chrono::steady_clock::now();
    h();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  double bf = 1e300, bg = 1e300;
  for (int i = 0; i < reps; ++i) {
    bf = std::min(bf, once(f));
    bg = std::min(bg, once(g));
  }
  return {bf, bg};
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 400;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;

#ifdef QTORUS_HAVE_OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << "truncation: " << n << "\n";

  const BandOperator a = op_curve(CurveIndex(2, 3), n);
  const BandOperator b = op_curve(CurveIndex(3, -1), n);
  const ZSeq z = z_unknot(n);
  const std::size_t depth = n - a.width();

  BandOperator ps = kernels::multiply_serial(a, b);
  BandOperator pp = kernels::multiply_parallel(a, b);
  if (!(ps == pp)) {
    std::cerr << "multiply: serial and parallel disagree\n";
    return 1;
  }
  if (kernels::pair_apply_serial(a, z.kappa, depth) != kernels::pair_apply_parallel(a, z.kappa, depth)) {
    std::cerr << "pair_apply: serial and parallel disagree\n";
    return 1;
  }

  const auto [ms, mp] = best_of([&] { ps = kernels::multiply_serial(a, b); },
                                 [&] { pp = kernels::multiply_parallel(a, b); }, reps);
  const auto [as, ap] = best_of([&] { (void)kernels::pair_apply_serial(a, z.kappa, depth); },
                                [&] { (void)kernels::pair_apply_parallel(a, z.kappa, depth); }, reps);

  std::cout << "multiply    serial " << ms << " s  parallel " << mp << " s  speedup " << ms / mp << "\n";
  std::cout << "pair_apply  serial " << as << " s  parallel " << ap << " s  speedup " << as / ap << "\n";
  return 0;
}
