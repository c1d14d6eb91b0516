#pragma once
// Exact signature of the Tristram-Levine form
//   H(zeta) = (1 - zeta) V + (1 - conj(zeta)) V^T,   zeta = e^{2 pi i a/n}.
//
// The matrix is held symbolically over Z[z, z^-1] with conj(z) = z^-1, so it
// is Hermitian as written.  A fraction-free Bareiss congruence elimination
// with diagonal pivoting produces the nested principal minors D_1, ..., D_m
// of a congruent matrix; Jacobi's rule turns their signs into the signature:
//   sigma = sum_k sign(D_k * D_{k-1}).
// Minor signs are certified by interval evaluation, zero minors are excluded
// exactly (divisibility by Phi_n), and when a diagonal dies entirely we apply
// the unimodular congruence  v_i += z^m v_j  which revives it; m in {0, 1}
// always suffices for n >= 3, since the angles 2 pi a m / n step off the
// zero set of cosine.

#include <vector>

#include "concord/laurent.hpp"

namespace concord {

inline bool alexander_nonvanishing(const IntMatrix& v, const CircleAngle& zeta) {
    if (!v.is_square()) throw DimensionMismatch("alexander_nonvanishing needs a square matrix");
    if (v.rows() == 0) return true;  // unknot: Delta = 1
    IntPoly delta = alexander_poly(v);
    if (delta.is_zero()) return false;
    const Int& n = zeta.denom();
    if (!n.fits_ulong_p()) return true;  // phi(n) astronomically exceeds deg Delta
    unsigned long nn = n.get_ui();
    if (euler_phi(nn) > static_cast<unsigned long>(delta.deg())) return true;
    auto [q, r] = divmod_monic(delta, cyclotomic(nn));
    (void)q;
    return !r.is_zero();
}

inline int hermitian_signature(const IntMatrix& v, const CircleAngle& zeta,
                               unsigned long start_prec = 64) {
    if (!v.is_square()) throw DimensionMismatch("hermitian_signature needs a square matrix");
    if (zeta.is_one()) throw AngleOne("Hermitian form degenerates at zeta = 1");
    std::size_t m = v.rows();
    if (m == 0) return 0;
    if (!alexander_nonvanishing(v, zeta))
        throw SingularAtRoot("zeta is a root of the Alexander polynomial; signature jumps here");

    const Int& n = zeta.denom();
    Laurent one_minus_z(0, {Int(1), Int(-1)});
    Laurent one_minus_zinv(-1, {Int(-1), Int(1)});

    std::vector<std::vector<Laurent>> w(m, std::vector<Laurent>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            w[i][j] = one_minus_z * Laurent::constant(v.at(i, j)) +
                      one_minus_zinv * Laurent::constant(v.at(j, i));

    std::vector<std::size_t> rem(m);
    for (std::size_t i = 0; i < m; ++i) rem[i] = i;

    Laurent prev = Laurent::constant(Int(1));
    int prev_sign = 1;
    int sig = 0;

    while (!rem.empty()) {
        // pick a diagonal whose minor is nonzero at zeta
        std::size_t pick = rem.size();
        for (std::size_t t = 0; t < rem.size(); ++t) {
            if (!vanishes_at_root(w[rem[t]][rem[t]], n)) {
                pick = t;
                break;
            }
        }
        if (pick == rem.size()) {
            // every remaining diagonal vanishes; revive one with v_i += z^m v_j
            std::size_t ri = rem.size(), rj = rem.size();
            for (std::size_t x = 0; x < rem.size() && ri == rem.size(); ++x)
                for (std::size_t y = 0; y < rem.size(); ++y) {
                    if (x == y) continue;
                    if (!vanishes_at_root(w[rem[x]][rem[y]], n)) {
                        ri = x;
                        rj = y;
                        break;
                    }
                }
            if (ri == rem.size())
                throw SingularAtRoot("Hermitian form is singular at zeta");
            std::size_t i = rem[ri], j = rem[rj];
            long shift = -1;
            for (long cand = 0; cand <= 4 && shift < 0; ++cand) {
                Laurent nd = w[i][i] + w[i][j].shifted(cand) + w[j][i].shifted(-cand) + w[j][j];
                if (!vanishes_at_root(nd, n)) shift = cand;
            }
            if (shift < 0) throw Error("internal: diagonal revival failed");
            for (std::size_t r : rem) w[r][i] = w[r][i] + w[r][j].shifted(shift);
            for (std::size_t c : rem) w[i][c] = w[i][c] + w[j][c].shifted(-shift);
            continue;
        }

        std::size_t k = rem[pick];
        rem.erase(rem.begin() + pick);

        Laurent piv = w[k][k];
        if (!piv.is_palindromic()) throw Error("internal: pivot minor is not real");
        int s = sign_at_root(piv, zeta, start_prec);
        sig += s * prev_sign;

        for (std::size_t i : rem)
            for (std::size_t j : rem)
                w[i][j] = exact_div(piv * w[i][j] - w[i][k] * w[k][j], prev);
        prev = piv;
        prev_sign = s;
    }
    return sig;
}

}  // namespace concord
