#pragma once
// Exact arbitrary-precision rationals.  Thin value wrapper over GMP's mpq so
// the rest of the library never sees expression templates, and serialization
// is pinned to the canonical "a/b" form (lowest terms, positive denominator).

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

#include "concord/errors.hpp"

namespace concord {

using Int = mpz_class;

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw DomainError("integer out of machine range: " + z.get_str());
    return z.get_si();
}

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(const Int& n) : q_(n) {}
    Rational(long n, long d) : Rational(Int(n), Int(d)) {}
    Rational(const Int& n, const Int& d) {
        if (sgn(d) == 0) throw DomainError("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    const Int num() const { return Int(q_.get_num()); }
    const Int den() const { return Int(q_.get_den()); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // Canonical rendering: "a" for integers, "a/b" otherwise.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Accepts "a" or "a/b" with optional leading '-'.
    static Rational parse(const std::string& s) {
        auto bad = [&]() -> ParseError { return ParseError("malformed rational \"" + s + "\""); };
        if (s.empty()) throw bad();
        auto slash = s.find('/');
        std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
        std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw bad();
        auto digits = [](const std::string& t, bool sign_ok) {
            size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        if (!digits(ns, true) || !digits(ds, false)) throw bad();
        Int n(ns), d(ds);
        if (sgn(d) == 0) throw bad();
        return Rational(n, d);
    }

    double to_double() const { return q_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

// floor/ceil of a/b as integers
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace concord
