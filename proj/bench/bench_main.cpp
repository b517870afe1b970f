// Timing comparison between the serial reference paths and the OpenMP
// kernels, on the workloads the library actually runs: the verification
// quadrature grid, a lambda sweep of the closed form, and an l-scan of the
// uncertainty product. Also confirms the parallel results are bitwise equal
// to the serial ones.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#include "gammaft/oracle.hpp"
#include "gammaft/parallel.hpp"
#include "gammaft/physics.hpp"
#include "gammaft/transform.hpp"

namespace {

using namespace gammaft;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Workload {
  const char* name;
  double serial_s = 0.0;
  double parallel_s = 0.0;
  bool bitwise_equal = false;
};

Workload bench_quadrature_grid() {
  std::vector<TransformParams> grid;
  for (double a : {0.3, 0.5, 1.0, 1.7, 2.5})
    for (double b : {0.3, 0.5, 1.0, 1.7, 2.5})
      for (int m = 0; m <= 6; ++m)
        for (double lam : {-2.0, -0.5, 0.0, 0.7, 2.0})
          grid.push_back({a, b, m, lam});

  // Parallelism over grid points (panel evaluation inside each integral
  // stays serial), the way the verification grid actually runs.
  auto run = [&](bool parallel) {
    QuadratureSpec spec;
    spec.parallel = false;
    std::vector<Complex> out(grid.size());
    par::parallel_for(
        grid.size(),
        [&](std::size_t i) { out[i] = quad_transform(grid[i], spec).value; },
        parallel);
    return out;
  };

  Workload w{"adaptive quadrature grid (875 integrals)"};
  auto t0 = Clock::now();
  const auto serial = run(false);
  w.serial_s = seconds_since(t0);
  t0 = Clock::now();
  const auto parallel = run(true);
  w.parallel_s = seconds_since(t0);
  w.bitwise_equal =
      std::memcmp(serial.data(), parallel.data(),
                  serial.size() * sizeof(Complex)) == 0;
  return w;
}

Workload bench_lambda_sweep() {
  const int n = 400000;
  auto run = [&](bool parallel) {
    std::vector<Complex> out(n);
    par::parallel_for(
        n,
        [&](std::size_t i) {
          const double lam = -8.0 + 16.0 * static_cast<double>(i) / n;
          out[i] = eval_transform(TransformParams{0.7, 1.3, 5, lam});
        },
        parallel);
    return out;
  };

  Workload w{"closed-form lambda sweep (400k evaluations)"};
  auto t0 = Clock::now();
  const auto serial = run(false);
  w.serial_s = seconds_since(t0);
  t0 = Clock::now();
  const auto parallel = run(true);
  w.parallel_s = seconds_since(t0);
  w.bitwise_equal =
      std::memcmp(serial.data(), parallel.data(),
                  serial.size() * sizeof(Complex)) == 0;
  return w;
}

Workload bench_uncertainty_scan() {
  const int lmax = 4000;
  auto run = [&](bool parallel) {
    std::vector<double> out(lmax + 1);
    par::parallel_for(
        static_cast<std::size_t>(lmax + 1),
        [&](std::size_t i) { out[i] = uncertainty_product(2, double(i)); },
        parallel);
    return out;
  };

  Workload w{"uncertainty l-scan (n=2, l=0..4000)"};
  auto t0 = Clock::now();
  const auto serial = run(false);
  w.serial_s = seconds_since(t0);
  t0 = Clock::now();
  const auto parallel = run(true);
  w.parallel_s = seconds_since(t0);
  w.bitwise_equal = std::memcmp(serial.data(), parallel.data(),
                                serial.size() * sizeof(double)) == 0;
  return w;
}

}  // namespace

int main() {
  std::printf("workers: %d\n\n", par::worker_count());
  std::printf("%-46s %10s %10s %8s %s\n", "workload", "serial[s]",
              "openmp[s]", "speedup", "bitwise");
  for (auto& bench : {&bench_quadrature_grid, &bench_lambda_sweep,
                      &bench_uncertainty_scan}) {
    const Workload w = bench();
    std::printf("%-46s %10.3f %10.3f %7.2fx %s\n", w.name, w.serial_s,
                w.parallel_s, w.serial_s / w.parallel_s,
                w.bitwise_equal ? "equal" : "DIFFER");
  }
  return 0;
}
