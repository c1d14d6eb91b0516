#pragma once
// Integer Laurent polynomials in z, evaluated at a fixed root of unity
// zeta = e^{2 pi i a/n}.  Complex conjugation is z -> z^-1, so Hermitian
// matrix entries stay symbolically conjugate-symmetric and the pivots of a
// congruence elimination are palindromic (hence real-valued at zeta).
//
// Exactness: a Laurent value vanishes at zeta iff Phi_n divides its shifted
// polynomial form.  When phi(n) exceeds the exponent span this is impossible,
// which keeps the test cheap even for angles with enormous denominators.

#include <string>
#include <vector>

#include "concord/circle_angle.hpp"
#include "concord/dyadic.hpp"
#include "concord/poly.hpp"

namespace concord {

struct Laurent {
    long lo = 0;          // exponent of c[0]
    std::vector<Int> c;   // value = sum c[i] z^(lo+i); trimmed, empty = 0

    Laurent() = default;
    Laurent(long low, std::vector<Int> coeffs) : lo(low), c(std::move(coeffs)) { normalize(); }
    static Laurent zero() { return Laurent(); }
    static Laurent constant(const Int& k) {
        if (sgn(k) == 0) return Laurent();
        return Laurent(0, {k});
    }

    void normalize() {
        std::size_t front = 0;
        while (front < c.size() && sgn(c[front]) == 0) ++front;
        if (front == c.size()) {
            c.clear();
            lo = 0;
            return;
        }
        std::size_t back = c.size();
        while (sgn(c[back - 1]) == 0) --back;
        if (front > 0 || back < c.size()) {
            std::vector<Int> nc(c.begin() + front, c.begin() + back);
            c = std::move(nc);
            lo += static_cast<long>(front);
        }
    }

    bool is_zero() const { return c.empty(); }
    long hi() const { return lo + static_cast<long>(c.size()) - 1; }
    long span() const { return is_zero() ? 0 : hi() - lo; }
    const Int coeff(long e) const {
        if (is_zero() || e < lo || e > hi()) return Int(0);
        return c[e - lo];
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long nlo = std::min(a.lo, b.lo), nhi = std::max(a.hi(), b.hi());
        std::vector<Int> r(nhi - nlo + 1, Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[a.lo + i - nlo] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[b.lo + i - nlo] += b.c[i];
        return Laurent(nlo, std::move(r));
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return Laurent();
        std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (sgn(a.c[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        }
        return Laurent(a.lo + b.lo, std::move(r));
    }
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.lo == b.lo && a.c == b.c;
    }

    // complex conjugate at any root of unity: z -> z^-1
    Laurent conj() const {
        if (is_zero()) return Laurent();
        std::vector<Int> r(c.rbegin(), c.rend());
        return Laurent(-hi(), std::move(r));
    }

    Laurent shifted(long k) const {  // multiply by z^k
        if (is_zero()) return Laurent();
        return Laurent(lo + k, c);
    }

    bool is_palindromic() const {  // conj() == *this, i.e. real at every root of unity
        if (is_zero()) return true;
        if (lo != -hi()) return false;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != c[c.size() - 1 - i]) return false;
        return true;
    }

    IntPoly as_poly() const {  // the shifted polynomial z^-lo * this
        return IntPoly(std::vector<Int>(c));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (sgn(c[i]) == 0) continue;
            if (!out.empty()) out += " + ";
            out += c[i].get_str() + "*z^" + std::to_string(lo + static_cast<long>(i));
        }
        return out;
    }
};

// Exact quotient a / b in Z[z, z^-1]; the caller guarantees divisibility
// (Bareiss elimination does).  Implemented as polynomial long division.
inline Laurent exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw DomainError("laurent division by zero");
    if (a.is_zero()) return Laurent();
    IntPoly q = div_exact(a.as_poly(), b.as_poly());
    Laurent out(a.lo - b.lo, std::move(q.c));
    return out;
}

// Does the value at zeta = e^{2 pi i a/n} vanish?  Exact.
inline bool vanishes_at_root(const Laurent& v, const Int& n) {
    if (v.is_zero()) return true;
    if (!n.fits_ulong_p()) {
        // phi(n) >= sqrt(n/2) dwarfs any span we ever build
        return false;
    }
    unsigned long nn = n.get_ui();
    if (nn == 1) {  // zeta = 1: plain coefficient sum
        Int s(0);
        for (const auto& x : v.c) s += x;
        return sgn(s) == 0;
    }
    unsigned long phi = euler_phi(nn);
    if (phi > static_cast<unsigned long>(v.span())) return false;
    auto [q, r] = divmod_monic(v.as_poly(), cyclotomic(nn));
    (void)q;
    return r.is_zero();
}

// Sign of a palindromic (real-valued) Laurent at zeta = e^{2 pi i a/n}:
// value = c_0 + sum_{e>0} c_e * 2 cos(2 pi a e / n).  Adaptive precision;
// termination is guaranteed because vanishing was excluded exactly first.
inline int sign_at_root(const Laurent& v, const CircleAngle& zeta, unsigned long start_prec = 64) {
    if (!v.is_palindromic()) throw DomainError("sign_at_root needs a real (palindromic) value");
    if (vanishes_at_root(v, zeta.denom())) return 0;
    const Int& a = zeta.numer();
    const Int& n = zeta.denom();
    for (unsigned long prec = start_prec;; prec *= 2) {
        MpzInterval sum(Int(0), Int(0));
        Int two_p;
        mpz_ui_pow_ui(two_p.get_mpz_t(), 2, prec);
        sum = sum + MpzInterval(v.coeff(0) * two_p, v.coeff(0) * two_p);
        for (long e = 1; e <= v.hi(); ++e) {
            Int k = v.coeff(e);
            if (sgn(k) == 0) continue;
            MpzInterval c = enclosure::cos_angle(a * Int(e), n, prec);
            sum = sum + c.scaled(k * 2);
        }
        int s = sum.certified_sign();
        if (s != 0) return s;
        if (prec > (1u << 22)) throw Error("internal: sign_at_root precision runaway");
    }
}

}  // namespace concord
