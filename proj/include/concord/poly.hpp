#pragma once
// Exact univariate polynomial arithmetic over Z and Q, cyclotomic polynomials,
// the palindromic-to-trace substitution q(z + 1/z), and Sturm chains.  These
// are the workhorses behind Alexander-root detection and isolation.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "concord/int_matrix.hpp"
#include "concord/rational.hpp"

namespace concord {

struct IntPoly {
    std::vector<Int> c;  // c[i] is the coefficient of x^i; trimmed, empty = 0

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly constant(const Int& k) { return IntPoly(std::vector<Int>{k}); }
    static IntPoly from_longs(std::initializer_list<long> v) {
        std::vector<Int> w;
        for (long x : v) w.emplace_back(x);
        return IntPoly(std::move(w));
    }

    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long deg() const { return static_cast<long>(c.size()) - 1; }
    const Int coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return Int(0);
        return c[i];
    }
    const Int& lead() const { return c.back(); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return IntPoly(std::move(r));
    }
    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (sgn(a.c[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        }
        return IntPoly(std::move(r));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

    IntPoly scaled(const Int& k) const {
        IntPoly r = *this;
        for (auto& x : r.c) x *= k;
        r.trim();
        return r;
    }

    IntPoly shifted(long k) const {  // multiply by x^k, k >= 0
        if (is_zero()) return IntPoly();
        std::vector<Int> r(c.size() + k, Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) r[i + k] = c[i];
        return IntPoly(std::move(r));
    }

    IntPoly derivative() const {
        if (c.size() <= 1) return IntPoly();
        std::vector<Int> r(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Int(static_cast<long>(i));
        return IntPoly(std::move(r));
    }

    Int content() const {
        Int g(0);
        for (const auto& x : c) g = concord::gcd(g, x);
        return g;
    }
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        Int g = content();
        if (sgn(lead()) < 0) g = -g;
        IntPoly r = *this;
        for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }
    Int eval_int(const Int& x) const {
        Int acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool is_palindromic() const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != c[c.size() - 1 - i]) return false;
        return true;
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = deg(); i >= 0; --i) {
            if (sgn(coeff(i)) == 0) continue;
            Int k = coeff(i);
            if (!out.empty()) out += sgn(k) > 0 ? " + " : " - ";
            else if (sgn(k) < 0) out += "-";
            Int a = ::abs(k);
            bool unit = a == 1 && i != 0;
            if (!unit) out += a.get_str();
            if (i > 0) out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }
};

// Division by a monic divisor stays in Z[x]; returns {quotient, remainder}.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& d) {
    if (d.is_zero() || d.lead() != 1) throw DomainError("divmod_monic needs monic divisor");
    IntPoly r = a;
    long dd = d.deg();
    if (r.deg() < dd) return {IntPoly(), r};
    std::vector<Int> q(r.deg() - dd + 1, Int(0));
    while (!r.is_zero() && r.deg() >= dd) {
        long k = r.deg() - dd;
        Int f = r.lead();
        q[k] = f;
        for (long i = 0; i <= dd; ++i) r.c[k + i] -= f * d.coeff(i);
        r.trim();
    }
    return {IntPoly(std::move(q)), r};
}

// Exact division in Z[x]; the caller guarantees divisibility (asserted).
inline IntPoly div_exact(const IntPoly& a, const IntPoly& d) {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.deg() < d.deg()) throw DomainError("inexact polynomial division");
    IntPoly r = a;
    long dd = d.deg();
    std::vector<Int> q(r.deg() - dd + 1, Int(0));
    while (!r.is_zero() && r.deg() >= dd) {
        long k = r.deg() - dd;
        Int f;
        if (!mpz_divisible_p(r.lead().get_mpz_t(), d.lead().get_mpz_t()))
            throw DomainError("inexact polynomial division");
        mpz_divexact(f.get_mpz_t(), r.lead().get_mpz_t(), d.lead().get_mpz_t());
        q[k] = f;
        for (long i = 0; i <= dd; ++i) r.c[k + i] -= f * d.coeff(i);
        r.trim();
    }
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return IntPoly(std::move(q));
}

namespace detail {

// Rational-coefficient remainder, used for gcds and Sturm chains.
inline std::vector<Rational> rat_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline std::vector<Rational> to_rat(const IntPoly& p) {
    std::vector<Rational> v(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) v[i] = Rational(p.c[i]);
    return v;
}

// Clear denominators and make primitive, preserving sign.
inline IntPoly to_primitive_int(const std::vector<Rational>& v) {
    Int lcm(1);
    for (const auto& r : v) {
        Int d = r.den();
        Int g = concord::gcd(lcm, d);
        lcm = lcm / g * d;
    }
    std::vector<Int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].num() * (lcm / v[i].den());
    IntPoly p(std::move(w));
    if (p.is_zero()) return p;
    Int g = p.content();
    for (auto& x : p.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return p;
}

}  // namespace detail

// Primitive gcd over Z[x] with positive leading coefficient.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    auto ra = detail::to_rat(a), rb = detail::to_rat(b);
    while (true) {
        auto r = detail::rat_rem(ra, rb);
        if (r.empty()) break;
        ra = std::move(rb);
        rb = std::move(r);
    }
    return detail::to_primitive_int(rb);
}

inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero() || p.deg() == 0) return p.is_zero() ? p : IntPoly::constant(Int(1));
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.deg() == 0) return p.primitive_part();
    // long-division quotient over Q, cleared back to a primitive integer poly
    std::vector<Rational> num = detail::to_rat(p), den = detail::to_rat(g);
    std::vector<Rational> quo(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational f = num.back() / den.back();
        std::size_t off = num.size() - den.size();
        quo[off] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[off + i] -= f * den[i];
        while (!num.empty() && num.back().is_zero()) num.pop_back();
    }
    return detail::to_primitive_int(quo);
}

inline bool divides(const IntPoly& d, const IntPoly& p) {
    if (d.is_zero()) return p.is_zero();
    if (p.is_zero()) return true;
    if (p.deg() < d.deg()) return false;
    auto r = detail::rat_rem(detail::to_rat(p), detail::to_rat(d));
    return r.empty();
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Phi_n(x), cached.  Computed as (x^n - 1) / prod_{d | n, d < n} Phi_d(x).
inline const IntPoly& cyclotomic(unsigned long n) {
    static std::map<unsigned long, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::function<const IntPoly&(unsigned long)> get = [&](unsigned long m) -> const IntPoly& {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        std::vector<Int> xn(m + 1, Int(0));
        xn[0] = -1;
        xn[m] = 1;
        IntPoly p(std::move(xn));
        for (unsigned long d = 1; d < m; ++d)
            if (m % d == 0) p = div_exact(p, get(d));
        return cache.emplace(m, std::move(p)).first->second;
    };
    return get(n);
}

// For palindromic p of even degree 2h, returns q with p(z) = z^h * q(z + 1/z).
// Uses z^j + z^-j = B_j(c), B_0 = 2, B_1 = c, B_{j+1} = c B_j - B_{j-1}.
inline IntPoly trace_transform(const IntPoly& p) {
    if (p.is_zero()) return p;
    if (!p.is_palindromic() || p.deg() % 2 != 0)
        throw DomainError("trace_transform needs a palindromic polynomial of even degree");
    long h = p.deg() / 2;
    IntPoly cpoly = IntPoly::from_longs({0, 1});
    IntPoly prev = IntPoly::constant(Int(2));  // B_0
    IntPoly cur = cpoly;                       // B_1
    IntPoly q = IntPoly::constant(p.coeff(h));
    for (long j = 1; j <= h; ++j) {
        q = q + cur.scaled(p.coeff(h + j));
        IntPoly next = cpoly * cur - prev;
        prev = cur;
        cur = next;
    }
    return q;
}

// Minimal polynomial of 2 cos(2 pi / n) over Q, via the trace transform of Phi_n.
inline IntPoly real_cyclotomic_minpoly(unsigned long n) {
    if (n == 1) return IntPoly::from_longs({-2, 1});  // c - 2
    if (n == 2) return IntPoly::from_longs({2, 1});   // c + 2
    return trace_transform(cyclotomic(n));
}

// Sturm chain of a squarefree polynomial, stored as primitive integer polys
// (each scaled by a positive rational, so sign sequences are unchanged).
struct SturmChain {
    std::vector<IntPoly> seq;

    explicit SturmChain(const IntPoly& p) {
        IntPoly p0 = p.primitive_part();
        seq.push_back(p0);
        IntPoly p1 = p0.derivative().primitive_part();
        if (p1.is_zero()) return;
        seq.push_back(p1);
        auto a = detail::to_rat(p0), b = detail::to_rat(p1);
        while (true) {
            auto r = detail::rat_rem(a, b);
            if (r.empty()) break;
            for (auto& x : r) x = -x;
            seq.push_back(detail::to_primitive_int(r));
            a = std::move(b);
            b = detail::to_rat(seq.back());
        }
    }

    // Sign variations at a rational point (zeros skipped per Sturm convention).
    int variations_at(const Rational& x) const {
        int count = 0, last = 0;
        for (const auto& s : seq) {
            int sg = s.eval(x).sign();
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++count;
            last = sg;
        }
        return count;
    }

    // Number of roots in (a, b], a < b, assuming neither endpoint is a root.
    int count_in(const Rational& a, const Rational& b) const {
        return variations_at(a) - variations_at(b);
    }
};

// Alexander polynomial det(V - z V^T) of a square integer matrix, computed by
// interpolation through exact integer determinants at z = 0..dim.
inline IntPoly alexander_poly(const IntMatrix& v) {
    if (!v.is_square()) throw DimensionMismatch("alexander_poly needs a square matrix");
    std::size_t n = v.rows();
    if (n == 0) return IntPoly::constant(Int(1));
    IntMatrix vt = v.transpose();
    std::vector<Rational> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = v.at(i, j) - Int(static_cast<long>(k)) * vt.at(i, j);
        xs.emplace_back(static_cast<long>(k));
        ys.emplace_back(m.det());
    }
    // Newton divided differences
    std::size_t m = xs.size();
    std::vector<Rational> coef = ys;
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    std::vector<Rational> poly{coef[m - 1]};
    for (std::size_t i = m - 1; i-- > 0;) {
        // poly = poly * (x - xs[i]) + coef[i]
        poly.insert(poly.begin(), Rational(0));
        for (std::size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= xs[i] * poly[j + 1];
        poly[0] += coef[i];
    }
    std::vector<Int> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (!poly[i].is_integer()) throw Error("internal: non-integer Alexander coefficient");
        out[i] = poly[i].num();
    }
    return IntPoly(std::move(out));
}

}  // namespace concord
