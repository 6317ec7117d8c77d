#include "mixlab/kernels.hpp"

namespace mixlab::kernels {

namespace {

// Shared inner loops. The OpenMP variants parallelize over the outer index
// only; every c[i*n+j] is reduced sequentially over the middle index, which
// keeps results bit-identical between the serial and parallel paths.

inline void matmul_row(const double* a, const double* b, double* ci,
                       std::size_t i, std::size_t k, std::size_t n) {
    const double* ai = a + i * k;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t kk = 0; kk < k; ++kk) {
        const double aik = ai[kk];
        const double* bk = b + kk * n;
        for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
}

inline void matmul_nt_row(const double* a, const double* b, double* ci,
                          std::size_t i, std::size_t k, std::size_t n) {
    const double* ai = a + i * k;
    for (std::size_t j = 0; j < n; ++j) {
        const double* bj = b + j * k;
        double acc = 0.0;
        for (std::size_t kk = 0; kk < k; ++kk) acc += ai[kk] * bj[kk];
        ci[j] = acc;
    }
}

inline void matmul_tn_row(const double* a, const double* b, double* ck,
                          std::size_t kk, std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) ck[j] = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double aik = a[i * k + kk];
        const double* bi = b + i * n;
        for (std::size_t j = 0; j < n; ++j) ck[j] += aik * bi[j];
    }
}

} // namespace

void matmul_omp(const double* a, const double* b, double* c,
                std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < m; ++i) matmul_row(a, b, c + i * n, i, k, n);
}

void matmul_serial(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) matmul_row(a, b, c + i * n, i, k, n);
}

void matmul_nt_omp(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < m; ++i) matmul_nt_row(a, b, c + i * n, i, k, n);
}

void matmul_nt_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) matmul_nt_row(a, b, c + i * n, i, k, n);
}

void matmul_tn_omp(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (std::size_t kk = 0; kk < k; ++kk) matmul_tn_row(a, b, c + kk * n, kk, m, k, n);
}

void matmul_tn_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t kk = 0; kk < k; ++kk) matmul_tn_row(a, b, c + kk * n, kk, m, k, n);
}

} // namespace mixlab::kernels
