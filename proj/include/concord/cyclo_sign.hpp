#pragma once
// Exact sign determination of integer polynomials (in the trace coordinate
// c = 2 cos(2 pi t)) at rational angles.  Zero is decided algebraically:
// P(2 cos(2 pi a/n)) = 0 iff the minimal polynomial of 2 cos(2 pi/n) divides
// P, which is impossible once phi(n)/2 exceeds deg P.  Nonzero signs are then
// certified by adaptive-precision interval evaluation.

#include "concord/circle_angle.hpp"
#include "concord/dyadic.hpp"
#include "concord/poly.hpp"

namespace concord {

// 2 cos(2 pi a/n) is rational precisely for n in {1, 2, 3, 4, 6}
inline bool trace_is_rational(const Int& n, Rational* out = nullptr) {
    if (!n.fits_ulong_p()) return false;
    switch (n.get_ui()) {
        case 1: if (out) *out = Rational(2); return true;
        case 2: if (out) *out = Rational(-2); return true;
        case 3: if (out) *out = Rational(-1); return true;
        case 4: if (out) *out = Rational(0); return true;
        case 6: if (out) *out = Rational(1); return true;
        default: return false;
    }
}

inline int sign_at_cos_angle(const IntPoly& p, const CircleAngle& t,
                             unsigned long start_prec = 64) {
    if (p.is_zero()) return 0;
    const Int& a = t.numer();
    const Int& n = t.denom();
    Rational c;
    if (trace_is_rational(n, &c)) return p.eval(c).sign();
    // exact zero test, only reachable for small n
    if (n.fits_ulong_p()) {
        unsigned long nn = n.get_ui();
        unsigned long half_phi = euler_phi(nn) / 2;
        if (half_phi <= static_cast<unsigned long>(p.deg()) &&
            divides(real_cyclotomic_minpoly(nn), p))
            return 0;
    }
    for (unsigned long prec = start_prec;; prec *= 2) {
        Int two_p;
        mpz_ui_pow_ui(two_p.get_mpz_t(), 2, prec);
        MpzInterval x = enclosure::cos_angle(a, n, prec).scaled(Int(2));
        MpzInterval acc(p.lead() * two_p, p.lead() * two_p);
        for (long i = p.deg() - 1; i >= 0; --i) {
            acc = enclosure::mul(acc, x, prec);
            Int k = p.coeff(i) * two_p;
            acc = acc + MpzInterval(k, k);
        }
        int s = acc.certified_sign();
        if (s != 0) return s;
        if (prec > (1u << 22)) throw Error("internal: sign_at_cos_angle precision runaway");
    }
}

// Sturm variation count of a chain at the algebraic point c = 2 cos(2 pi t)
inline int variations_at_angle(const SturmChain& chain, const CircleAngle& t,
                               unsigned long start_prec = 64) {
    int count = 0, last = 0;
    for (const auto& s : chain.seq) {
        int sg = sign_at_cos_angle(s, t, start_prec);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

}  // namespace concord
