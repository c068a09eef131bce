#include "tropical/lp.hpp"

namespace trop {

std::optional<Vec> find_nonnegative(const Matrix& a, const Vec& b) {
    const std::size_t m = a.rows(), nv = a.cols(), N = nv + m;
    // tableau columns: original variables, artificials, right-hand side
    Matrix t(m, N + 1);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        int s = sgn(b[i]) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < nv; ++j) t(i, j) = s * a(i, j);
        t(i, nv + i) = 1;
        t(i, N) = s * b[i];
        basis[i] = nv + i;
    }
    // reduced costs of the phase-one objective (sum of artificials)
    Vec z(N + 1);
    for (std::size_t j = 0; j <= N; ++j) {
        if (j >= nv && j < N) continue;
        for (std::size_t i = 0; i < m; ++i) z[j] -= t(i, j);
    }
    while (true) {
        std::size_t enter = N;
        for (std::size_t j = 0; j < N; ++j)
            if (sgn(z[j]) < 0) {
                enter = j;
                break;
            }
        if (enter == N) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t(i, enter)) <= 0) continue;
            Rational ratio = t(i, N) / t(i, enter);
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // cannot happen: the phase-one objective is bounded below
        Rational inv = 1 / t(leave, enter);
        for (std::size_t j = 0; j <= N; ++j) t(leave, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t(i, enter)) == 0) continue;
            Rational f = t(i, enter);
            for (std::size_t j = 0; j <= N; ++j)
                if (sgn(t(leave, j)) != 0) t(i, j) -= f * t(leave, j);
        }
        Rational f = z[enter];
        for (std::size_t j = 0; j <= N; ++j)
            if (sgn(t(leave, j)) != 0) z[j] -= f * t(leave, j);
        basis[leave] = enter;
    }
    // z[N] is minus the objective value
    if (sgn(z[N]) != 0) return std::nullopt;
    Vec y(nv);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < nv) y[basis[i]] = t(i, N);
    return y;
}

}  // namespace trop
