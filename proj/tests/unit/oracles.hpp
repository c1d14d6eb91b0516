#pragma once
// Test-only oracles, deliberately independent of the library's computation
// paths: cofactor expansion for adjugates, a floating Jacobi eigenvalue count
// with certified error bars for Hermitian signatures, rational Gaussian
// elimination for matrix rank, and the classical lattice-point window count
// for torus knot signatures.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "concord/concord.hpp"

namespace oracle {

using concord::Int;
using concord::IntMatrix;
using concord::Rational;

// deterministic rng for property tests
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 1) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// determinant by cofactor expansion (dims <= 6)
inline Int cofactor_det(const IntMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Int(1);
    if (n == 1) return m.at(0, 0);
    Int acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Int term = m.at(0, j) * cofactor_det(sub);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// v * adj(M) * v^T via explicit cofactors
inline Int cofactor_quadratic(const IntMatrix& m, const std::vector<Int>& v) {
    std::size_t n = m.rows();
    Int acc(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix sub(n - 1, n - 1);
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == i) continue;
                    sub.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            Int cof = cofactor_det(sub);
            if ((i + j) % 2 == 1) cof = -cof;
            acc += v[i] * cof * v[j];
        }
    return acc;
}

// Signature of H(zeta) by cyclic Jacobi on the doubled real symmetric matrix
// [[Re, -Im], [Im, Re]], with Gershgorin-style error bars.  Returns false if
// the bars cannot separate some eigenvalue from zero.
inline bool float_signature(const IntMatrix& v, const concord::CircleAngle& zeta, int& out) {
    std::size_t n = v.rows();
    if (n == 0) {
        out = 0;
        return true;
    }
    double t = 2.0 * M_PI * zeta.value().to_double();
    std::complex<long double> z(std::cos(t), std::sin(t));
    std::complex<long double> a = 1.0L - z, b = 1.0L - std::conj(z);
    std::size_t m = 2 * n;
    std::vector<std::vector<long double>> s(m, std::vector<long double>(m, 0.0L));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<long double> h = a * static_cast<long double>(v.at(i, j).get_d()) +
                                          b * static_cast<long double>(v.at(j, i).get_d());
            s[i][j] = h.real();
            s[i][n + j] = -h.imag();
            s[n + i][j] = h.imag();
            s[n + i][n + j] = h.real();
        }
    for (int sweep = 0; sweep < 100; ++sweep) {
        long double off = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) off += s[i][j] * s[i][j];
        if (off < 1e-30L) break;
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = p + 1; q < m; ++q) {
                if (std::abs(s[p][q]) < 1e-24L) continue;
                long double theta = (s[q][q] - s[p][p]) / (2.0L * s[p][q]);
                long double sign_t = theta >= 0 ? 1.0L : -1.0L;
                long double tt = sign_t / (std::abs(theta) + std::sqrt(theta * theta + 1.0L));
                long double c = 1.0L / std::sqrt(tt * tt + 1.0L), sn = tt * c;
                for (std::size_t k = 0; k < m; ++k) {
                    long double skp = s[k][p], skq = s[k][q];
                    s[k][p] = c * skp - sn * skq;
                    s[k][q] = sn * skp + c * skq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    long double spk = s[p][k], sqk = s[q][k];
                    s[p][k] = c * spk - sn * sqk;
                    s[q][k] = sn * spk + c * sqk;
                }
            }
    }
    int pos = 0, neg = 0;
    for (std::size_t i = 0; i < m; ++i) {
        long double radius = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) radius += std::abs(s[i][j]);
        radius += 1e-12L;  // rounding slack
        if (s[i][i] - radius > 0)
            ++pos;
        else if (s[i][i] + radius < 0)
            ++neg;
        else
            return false;  // cannot certify
    }
    out = (pos - neg) / 2;  // doubled spectrum
    return true;
}

// Rank by plain rational Gaussian elimination (row echelon), written without
// reference to IntMatrix::rank.
inline std::size_t gauss_rank(std::vector<std::vector<Rational>> a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Classical signature of T(r,s) at e^{2 pi i t}: over the lattice points
// x = i/r + j/s (1 <= i < r, 1 <= j < s), sigma = #{x outside (t, t+1)} -
// #{x inside (t, t+1)}.  Exact rational comparisons throughout.
inline int torus_signature_window(long r, long s, const Rational& t) {
    int inside = 0, outside = 0;
    for (long i = 1; i < r; ++i)
        for (long j = 1; j < s; ++j) {
            Rational x = Rational(i, r) + Rational(j, s);
            if (t < x && x < t + Rational(1))
                ++inside;
            else
                ++outside;
        }
    return outside - inside;
}

// random symmetric + standard symplectic-triangular block: a valid Seifert
// matrix of genus g with entries in [-3, 3]
inline concord::SeifertForm random_seifert(Rng& rng, std::size_t genus) {
    std::size_t n = 2 * genus;
    IntMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Int x(rng.range(-3, 3));
            v.at(i, j) = x;
            v.at(j, i) = x;
        }
    for (std::size_t g = 0; g < genus; ++g) v.at(2 * g, 2 * g + 1) += 1;  // E block
    return concord::SeifertForm(std::move(v));
}

// random unimodular matrix as a product of elementary row operations
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int ops = 12) {
    IntMatrix u = IntMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1));
        if (i == j) continue;
        Int f(rng.range(-2, 2));
        for (std::size_t c = 0; c < n; ++c) u.at(i, c) += f * u.at(j, c);
    }
    return u;
}

}  // namespace oracle
