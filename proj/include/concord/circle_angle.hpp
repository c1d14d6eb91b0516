#pragma once
// Rational points on the unit circle.  CircleAngle(a, n) stands for
// zeta = e^{2*pi*i*a/n}, stored reduced with 0 <= a < n and gcd(a, n) = 1.
// All jump angles of knots with Seifert matrices that we ever evaluate at
// are of this form; irrational Alexander roots are handled by bracketing
// with such angles, never by evaluating at them.

#include <string>

#include "concord/rational.hpp"

namespace concord {

class CircleAngle {
public:
    CircleAngle() : a_(0), n_(1) {}
    CircleAngle(const Int& a, const Int& n) {
        if (sgn(n) <= 0) throw DomainError("circle angle needs positive denominator");
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());  // 0 <= r < n
        Int g = gcd(r, n);
        a_ = r / g;
        n_ = n / g;
    }
    CircleAngle(long a, long n) : CircleAngle(Int(a), Int(n)) {}

    static CircleAngle from_rational(const Rational& t) { return CircleAngle(t.num(), t.den()); }

    const Int& numer() const { return a_; }
    const Int& denom() const { return n_; }

    Rational value() const { return Rational(a_, n_); }
    bool is_one() const { return n_ == 1; }

    // zeta bar = e^{-2*pi*i*a/n}
    CircleAngle conjugate() const { return CircleAngle(n_ - a_, n_); }

    friend bool operator==(const CircleAngle& x, const CircleAngle& y) {
        return x.a_ == y.a_ && x.n_ == y.n_;
    }
    friend bool operator!=(const CircleAngle& x, const CircleAngle& y) { return !(x == y); }
    friend bool operator<(const CircleAngle& x, const CircleAngle& y) {
        return x.a_ * y.n_ < y.a_ * x.n_;
    }

    std::string str() const { return a_.get_str() + "/" + n_.get_str(); }

    // Accepts "a/n" or a bare integer (angle 0).
    static CircleAngle parse(const std::string& s) {
        Rational t = Rational::parse(s);
        return from_rational(t);
    }

private:
    Int a_, n_;
};

}  // namespace concord
