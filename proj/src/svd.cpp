#include "mixlab/svd.hpp"

#include <algorithm>
#include <cmath>

#include "mixlab/errors.hpp"

namespace mixlab {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kRelTol = 1e-12;

struct ColumnSet {
    std::size_t len = 0;
    std::vector<double> v; // column-major, columns contiguous

    double* col(std::size_t j) { return v.data() + j * len; }
};

inline double dot(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

// Zeroes the (p,q) entry of the implicit Gram matrix by a plane rotation of
// the two columns (Rutishauser's formulas).
inline void rotate_pair(double* cp, double* cq, std::size_t len, double tol) {
    const double a = dot(cp, cp, len);
    const double b = dot(cq, cq, len);
    const double c = dot(cp, cq, len);
    if (std::abs(c) <= tol) return;
    const double zeta = (b - a) / (2.0 * c);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double cs = 1.0 / std::sqrt(1.0 + t * t);
    const double sn = cs * t;
    for (std::size_t i = 0; i < len; ++i) {
        const double xp = cp[i];
        const double xq = cq[i];
        cp[i] = cs * xp - sn * xq;
        cq[i] = sn * xp + cs * xq;
    }
}

} // namespace

std::vector<double> singular_values(const Matrix& m) {
    if (m.rows() < 1 || m.cols() < 1)
        throw DomainError("singular_values: matrix must be at least 1x1");
    if (!m.all_finite()) throw DomainError("singular_values: non-finite input");

    // Orthogonalize over the smaller dimension.
    const bool flip = m.cols() > m.rows();
    const std::size_t n = flip ? m.rows() : m.cols();
    ColumnSet cs;
    cs.len = flip ? m.cols() : m.rows();
    cs.v.resize(n * cs.len);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (flip)
                cs.col(i)[j] = m(i, j);
            else
                cs.col(j)[i] = m(i, j);
        }

    double fro2 = 0.0;
    for (double x : cs.v) fro2 += x * x;
    const double tol = kRelTol * fro2;

    if (n > 1) {
        // Round-robin sweeps: each round pairs every column exactly once, so
        // the pair updates are disjoint and safe to run in parallel without
        // changing the result.
        const std::size_t np = n + (n % 2); // pad to even with a phantom column
        const std::size_t rounds = np - 1;
        std::vector<std::size_t> seq(np);
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            bool rotated = false;
            for (std::size_t r = 0; r < rounds; ++r) {
                seq[0] = 0;
                for (std::size_t i = 1; i < np; ++i) seq[i] = 1 + (r + i - 1) % (np - 1);
#pragma omp parallel for schedule(static) reduction(|| : rotated)
                for (std::size_t i = 0; i < np / 2; ++i) {
                    const std::size_t p = seq[i];
                    const std::size_t q = seq[np - 1 - i];
                    if (p >= n || q >= n) continue;
                    const double before = std::abs(dot(cs.col(p), cs.col(q), cs.len));
                    if (before > tol) {
                        rotate_pair(cs.col(p), cs.col(q), cs.len, tol);
                        rotated = true;
                    }
                }
            }
            if (!rotated) break;
        }
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(dot(cs.col(j), cs.col(j), cs.len));
    std::sort(sigma.begin(), sigma.end(), std::greater<>());
    return sigma;
}

} // namespace mixlab
