// Benchmarks the exact-rational row reduction: serial reference vs the
// OpenMP Gauss-Jordan kernel, verifying on every shape that both produce
// the identical canonical form.
//
//   bench_rowreduce [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "elias/linalg.hpp"

using namespace elias::linalg;

namespace {

std::vector<SparseVec> random_matrix(std::mt19937_64& rng, int rows, int cols, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> num(-99, 99);
  std::uniform_int_distribution<int> den(1, 13);
  std::vector<SparseVec> m;
  m.reserve(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    SparseVec v;
    for (int c = 0; c < cols; ++c) {
      if (coin(rng) > density) continue;
      int n = num(rng);
      if (n == 0) n = 1;
      v.push(c, make_rational(n, den(rng)));
    }
    m.push_back(std::move(v));
  }
  return m;
}

// overdetermined low-rank system: many rows spanning a small subspace, the
// shape the subspace computations actually produce
std::vector<SparseVec> random_span(std::mt19937_64& rng, int rows, int cols, int rank) {
  auto gens = random_matrix(rng, rank, cols, 0.4);
  std::uniform_int_distribution<int> pickc(-3, 3);
  std::uniform_int_distribution<std::size_t> pickg(0, gens.size() - 1);
  std::vector<SparseVec> m;
  for (int r = 0; r < rows; ++r) {
    SparseVec v;
    for (int k = 0; k < 3; ++k) {
      int c = pickc(rng);
      if (c != 0) v = axpy(v, Rational(c), gens[pickg(rng)]);
    }
    m.push_back(std::move(v));
  }
  return m;
}

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e18;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-26s %6s %6s | %12s %12s %9s %6s\n", "shape", "rows", "cols", "serial[s]",
              "parallel[s]", "speedup", "equal");

  std::mt19937_64 rng(321);
  bool all_equal = true;
  auto run = [&](const char* name, int rows, int cols, std::vector<SparseVec> m) {
    std::vector<SparseVec> out_serial, out_parallel;
    double ts = best_of(reps, [&] { out_serial = rref_serial(m); });
    double tp = best_of(reps, [&] { out_parallel = rref_parallel(m); });
    bool equal = out_serial == out_parallel;
    all_equal = all_equal && equal;
    std::printf("%-26s %6d %6d | %12.4f %12.4f %8.2fx %6s\n", name, rows, cols, ts, tp, ts / tp,
                equal ? "yes" : "NO");
  };

  // coefficient growth dominates past ~10^2 rows: keep shapes small enough
  // that a full run stays in seconds
  run("dense random", 40, 60, random_matrix(rng, 40, 60, 0.50));
  run("sparse random", 90, 120, random_matrix(rng, 90, 120, 0.12));
  run("span, rank 40", 600, 150, random_span(rng, 600, 150, 40));
  run("span, rank 70", 1200, 220, random_span(rng, 1200, 220, 70));
  if (!all_equal) {
    std::printf("MISMATCH: the kernels disagree\n");
    return 1;
  }
  return 0;
}
