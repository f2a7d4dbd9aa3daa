#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace cqe {

template <class R>
R abs_r(const R& x) {
    return x < R(0) ? -x : x;
}

/// Jacobi eigendecomposition of a symmetric NxN matrix.  Returns eigenvalues
/// (ascending) and the matching eigenvectors as columns of V.  Used to take
/// the smallest singular vector of the conic incidence matrix via A^T A.
template <class R, std::size_t N>
struct SymEigen {
    std::array<R, N> values{};
    std::array<std::array<R, N>, N> vectors{};  // vectors[i] = i-th eigenvector
};

template <class R, std::size_t N>
SymEigen<R, N> jacobi_eigen(std::array<std::array<R, N>, N> a) {
    using std::fabs;
    using std::sqrt;
    std::array<std::array<R, N>, N> v{};
    for (std::size_t i = 0; i < N; ++i) v[i][i] = R(1);

    for (int sweep = 0; sweep < 100; ++sweep) {
        R off(0);
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off += a[p][q] * a[p][q];
        if (!(off > R(0))) break;
        R norm(0);
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = 0; q < N; ++q) norm += a[p][q] * a[p][q];
        if (off <= norm * R(1e-60)) break;

        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                if (a[p][q] == R(0)) continue;
                const R theta = (a[q][q] - a[p][p]) / (R(2) * a[p][q]);
                R t = R(1) / (abs_r(theta) + sqrt(theta * theta + R(1)));
                if (theta < R(0)) t = -t;
                const R c = R(1) / sqrt(t * t + R(1));
                const R s = t * c;
                for (std::size_t k = 0; k < N; ++k) {
                    const R akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const R apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const R vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    SymEigen<R, N> out;
    std::array<std::size_t, N> order{};
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (a[order[j]][order[j]] < a[order[i]][order[i]])
                std::swap(order[i], order[j]);
    for (std::size_t i = 0; i < N; ++i) {
        out.values[i] = a[order[i]][order[i]];
        for (std::size_t k = 0; k < N; ++k) out.vectors[i][k] = v[k][order[i]];
    }
    return out;
}

} // namespace cqe
