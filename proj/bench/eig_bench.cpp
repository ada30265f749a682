/** \file eig_bench.cpp
 *  \brief Benchmark of the serial cyclic Jacobi kernel against the
 *         round-robin parallel kernel and the tridiagonal QL path.
 *
 *  Usage: eig_bench [dim ...]   (default dims: 128 256 512)
 *
 *  For each dimension a random symmetric matrix is diagonalized with both
 *  Jacobi variants and, after Householder reduction, with the QL solver;
 *  wall times and the max eigenvalue deviation between variants are
 *  printed.
 */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncint/core.hpp"
#include "ncint/eig.hpp"

namespace {

using ncint::CMatrix;
using ncint::cplx;

CMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = nd(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = nd(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

std::vector<double> sorted_values(ncint::eig::EigResult r) {
  std::sort(r.values.begin(), r.values.end());
  return r.values;
}

double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
  return dev;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> dims;
  for (int i = 1; i < argc; ++i) dims.push_back(std::strtoull(argv[i], nullptr, 10));
  if (dims.empty()) dims = {128, 256, 512};

#ifdef _OPENMP
  std::printf("# OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("# OpenMP disabled\n");
#endif
  std::printf("%8s %14s %14s %14s %12s %12s\n", "dim", "serial[s]", "roundrobin[s]",
              "tridiag[s]", "dev(s,rr)", "dev(rr,tq)");

  std::mt19937_64 rng(2024);
  for (const std::size_t n : dims) {
    const CMatrix a = random_symmetric(rng, n);

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = sorted_values(ncint::eig::jacobi_serial(a));
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = sorted_values(ncint::eig::jacobi_parallel(a));
    const double tp = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto tri = ncint::eig::symmetric_eigenvalues(a);
    std::sort(tri.begin(), tri.end());
    const double tt = seconds_since(t0);

    std::printf("%8zu %14.3f %14.3f %14.3f %12.3e %12.3e\n", n, ts, tp, tt,
                max_deviation(serial, parallel), max_deviation(parallel, tri));
  }
  return 0;
}
