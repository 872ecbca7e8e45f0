// Benchmark of the parallel matrix kernels against their serial references on
// random sparse polynomial matrices. Results must agree exactly; timings are
// wall clock, best of three.
#include <chrono>
#include <cstdio>
#include <functional>

#include "grelem/sample.hpp"

using namespace grelem;

namespace {

double best_ms(const std::function<void()>& body, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

MatP rand_mat(Sampler& s, unsigned n) {
  const CoeffRing ring = CoeffRing::integers();
  MatP m(n, GradedPoly(ring, 2));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m.at(i, j) = s.poly(ring, 2, 3, 4);
  return m;
}

}  // namespace

int main() {
  Sampler s(20240817);
  std::printf("parallel kernel vs serial reference\n");
  std::printf("%-22s %10s %11s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");
  for (unsigned n : {4u, 6u, 8u, 10u}) {
    const MatP a = rand_mat(s, n), b = rand_mat(s, n);
    MatP ps = a, pp = a;
    const double ts = best_ms([&] { ps = mul_serial(a, b); });
    const double tp = best_ms([&] { pp = mul_parallel(a, b); });
    internal_check(ps == pp, "parallel product must equal the serial product");
    std::printf("mul %2ux%-18u %10.2f %11.2f %7.2fx\n", n, n, ts, tp, ts / tp);
  }
  std::printf("\ndeterminant algorithm cross-check (both serial)\n");
  std::printf("%-22s %10s %11s %8s\n", "kernel", "cofactor ms", "bareiss ms", "ratio");
  for (unsigned n : {5u, 6u, 7u}) {
    const MatP a = rand_mat(s, n);
    GradedPoly ds = a.proto(), db = a.proto();
    const double ts = best_ms([&] { ds = det_cofactor(a); });
    const double tb = best_ms([&] { db = det_bareiss(a); });
    internal_check(ds == db, "condensation determinant must equal the cofactor determinant");
    std::printf("det %2ux%-18u %10.2f %11.2f %7.2fx\n", n, n, ts, tb, ts / tb);
  }
  return 0;
}
