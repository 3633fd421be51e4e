// Parallel kernels vs the serial reference, on shift truncations (banded)
// and on dense random matrices.
#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "wshift/dense.hpp"
#include "wshift/fixtures.hpp"
#include "wshift/oracle.hpp"

using namespace wshift;

namespace {

template <class F>
double seconds(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

Matrix random_dense(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
  }
  return m;
}

void row(const char* kind, const char* op, std::size_t n, double par, double ser) {
  std::printf("%-8s %-18s %6zu %12.6f %12.6f %8.2fx\n", kind, op, n, par, ser, ser / par);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-8s %-18s %6s %12s %12s %9s\n", "operand", "kernel", "dim", "parallel_s",
              "serial_s", "speedup");
  const WeightSpec spec = fixtures::example1();
  for (Index half : {100, 200, 400}) {
    const Truncation t = build_truncation(spec, half);
    const std::size_t n = t.dim();
    const int reps = half <= 200 ? 5 : 1;
    row("banded", "multiply", n, seconds([&] { kernels::multiply(t.t, t.t); }, reps),
        seconds([&] { kernels::serial::multiply(t.t, t.t); }, reps));
    row("banded", "self_commutator", n, seconds([&] { kernels::self_commutator(t.t); }, reps),
        seconds([&] { kernels::serial::self_commutator(t.t); }, reps));
  }
  std::mt19937_64 rng(7);
  for (std::size_t n : {128, 256}) {
    const Matrix a = random_dense(n, rng);
    const Matrix b = random_dense(n, rng);
    row("dense", "multiply", n, seconds([&] { kernels::multiply(a, b); }, 3),
        seconds([&] { kernels::serial::multiply(a, b); }, 3));
    row("dense", "transpose_left", n, seconds([&] { kernels::multiply_transpose_left(a, b); }, 3),
        seconds([&] { kernels::serial::multiply_transpose_left(a, b); }, 3));
    std::vector<double> x(n, 1.0);
    row("dense", "matvec", n, seconds([&] { kernels::matvec(a, x); }, 50),
        seconds([&] { kernels::serial::matvec(a, x); }, 50));
  }
  return 0;
}
