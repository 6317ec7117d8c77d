#pragma once

#include <cstddef>

namespace mixlab::kernels {

// Raw dense kernels behind Matrix and the network hot path. Each kernel has
// an OpenMP variant (the production path) and a serial reference used by the
// tests and the benchmark. Both variants accumulate every output element in
// the same order, so their results are bit-identical and independent of the
// thread count.

// c[m x n] = a[m x k] * b[k x n]
void matmul_omp(const double* a, const double* b, double* c,
                std::size_t m, std::size_t k, std::size_t n);
void matmul_serial(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n);

// c[m x n] = a[m x k] * b[n x k]^T
void matmul_nt_omp(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n);
void matmul_nt_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n);

// c[k x n] = a[m x k]^T * b[m x n]
void matmul_tn_omp(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n);
void matmul_tn_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n);

} // namespace mixlab::kernels
