#pragma once
// Fixed-point interval arithmetic over GMP integers, used solely to certify
// signs of real cyclotomic numbers.  An enclosure at precision p is a pair of
// mantissas [lo, hi] at scale 2^-p with the true value inside.  Soundness of
// every sign decision rests on these enclosures, so all rounding is outward.

#include <map>
#include <mutex>
#include <utility>

#include "concord/circle_angle.hpp"
#include "concord/rational.hpp"

namespace concord {

struct MpzInterval {
    Int lo, hi;  // value in [lo, hi] * 2^-prec for the ambient precision

    MpzInterval() : lo(0), hi(0) {}
    MpzInterval(Int l, Int h) : lo(std::move(l)), hi(std::move(h)) {}

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    int certified_sign() const {  // 0 means undecided
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }

    MpzInterval operator+(const MpzInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    MpzInterval operator-(const MpzInterval& o) const { return {lo - o.hi, hi - o.lo}; }

    // scale by an exact integer
    MpzInterval scaled(const Int& k) const {
        if (sgn(k) >= 0) return {lo * k, hi * k};
        return {hi * k, lo * k};
    }
};

namespace enclosure {

// interval product with rescale: inputs at scale 2^-p, output at scale 2^-p
inline MpzInterval mul(const MpzInterval& a, const MpzInterval& b, unsigned long prec) {
    Int c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    Int lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Int hi = std::max(std::max(c1, c2), std::max(c3, c4));
    Int one;
    mpz_ui_pow_ui(one.get_mpz_t(), 2, prec);
    Int qlo, qhi;
    mpz_fdiv_q(qlo.get_mpz_t(), lo.get_mpz_t(), one.get_mpz_t());
    mpz_cdiv_q(qhi.get_mpz_t(), hi.get_mpz_t(), one.get_mpz_t());
    return {qlo, qhi};
}

// [floor, ceil] of r * 2^prec
inline MpzInterval of_rational(const Rational& r, unsigned long prec) {
    Int two_p;
    mpz_ui_pow_ui(two_p.get_mpz_t(), 2, prec);
    Int scaled_num = r.num() * two_p;
    return {floor_div(scaled_num, r.den()), ceil_div(scaled_num, r.den())};
}

// atan(1/x) for integer x >= 2, alternating Gregory series with the unevaluated
// tail bounded by the first omitted term.
inline MpzInterval atan_inv(unsigned long x, unsigned long prec) {
    Int two_p;
    mpz_ui_pow_ui(two_p.get_mpz_t(), 2, prec);
    Int xx(static_cast<long>(x));
    Int x2 = xx * xx;
    MpzInterval sum(Int(0), Int(0));
    Int power = two_p / xx;  // floor(2^p / x^(2k+1)) with 1 ulp slack handled below
    unsigned long k = 0;
    Int slack(0);
    while (true) {
        Int term = power / Int(static_cast<long>(2 * k + 1));
        if (sgn(term) == 0) {
            // remaining true terms are < 1 ulp each and alternate; bound by 2 ulps
            sum.lo -= 2;
            sum.hi += 2;
            break;
        }
        if (k % 2 == 0) {
            sum.lo += term;
            sum.hi += term + 1;  // floor error
        } else {
            sum.lo -= term + 1;
            sum.hi -= term;
        }
        power /= x2;
        slack += 1;
        ++k;
    }
    // each floor division of `power` loses < 1 ulp; absorb accumulated drift
    sum.lo -= slack;
    sum.hi += slack;
    return sum;
}

// pi at scale 2^-prec via Machin: pi = 16 atan(1/5) - 4 atan(1/239).  Cached.
inline MpzInterval pi(unsigned long prec) {
    static std::map<unsigned long, MpzInterval> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
    unsigned long p = prec + 16;
    MpzInterval a5 = atan_inv(5, p);
    MpzInterval a239 = atan_inv(239, p);
    MpzInterval r = a5.scaled(Int(16)) - a239.scaled(Int(4));
    Int down;
    mpz_ui_pow_ui(down.get_mpz_t(), 2, p - prec);
    MpzInterval out(floor_div(r.lo, down), ceil_div(r.hi, down));
    cache.emplace(prec, out);
    return out;
}

// cos on [0, pi/2] by interval Taylor with a geometric tail bound.
inline MpzInterval cos_taylor(const MpzInterval& x, unsigned long prec) {
    Int two_p;
    mpz_ui_pow_ui(two_p.get_mpz_t(), 2, prec);
    MpzInterval x2 = mul(x, x, prec);
    MpzInterval term(two_p, two_p);  // 1
    MpzInterval sum = term;
    unsigned long k = 1;
    while (true) {
        term = mul(term, x2, prec);
        Int d(static_cast<long>((2 * k - 1) * (2 * k)));
        Int tlo, thi;
        mpz_fdiv_q(tlo.get_mpz_t(), term.lo.get_mpz_t(), d.get_mpz_t());
        mpz_cdiv_q(thi.get_mpz_t(), term.hi.get_mpz_t(), d.get_mpz_t());
        term = MpzInterval(tlo, thi);
        if (k % 2 == 1)
            sum = sum - term;
        else
            sum = sum + term;
        // |x| <= pi/2 so once 2k+1 >= 4 the term ratio is below 1/2 and the
        // remaining tail is bounded by the magnitude of the current term
        Int mag = std::max(Int(::abs(term.lo)), Int(::abs(term.hi)));
        if (mag <= 1 && k >= 2) {
            sum.lo -= 2;
            sum.hi += 2;
            break;
        }
        ++k;
        if (k > prec + 64) throw Error("internal: cos series failed to converge");
    }
    return sum;
}

// Certified enclosure of cos(2 pi a / n) at scale 2^-prec.
inline MpzInterval cos_angle(const Int& a, const Int& n, unsigned long prec) {
    unsigned long p = prec + 24;
    // reduce a/n mod 1 into [0, 1/2] using cos(2 pi (1-u)) = cos(2 pi u)
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    if (2 * r > n) r = n - r;
    // fold u in (1/4, 1/2] down to [0, 1/4) via cos(2 pi u) = -cos(2 pi (1/2 - u))
    bool flip = 4 * r > n;
    Rational frac = flip ? Rational(n - 2 * r, 2 * n) : Rational(r, n);
    MpzInterval x = mul(pi(p).scaled(Int(2)), of_rational(frac, p), p);  // in [0, pi/2]
    MpzInterval c = cos_taylor(x, p);
    if (flip) c = MpzInterval(-c.hi, -c.lo);
    Int down;
    mpz_ui_pow_ui(down.get_mpz_t(), 2, p - prec);
    return {floor_div(c.lo, down), ceil_div(c.hi, down)};
}

}  // namespace enclosure
}  // namespace concord
