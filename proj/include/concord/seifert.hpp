#pragma once
// Seifert-form data model: abstract Seifert matrices, winding-zero patterns
// with their axis coordinates in the Alexander dual basis, branched double
// cover presentations, and the rational self-linking number of the lifted
// axis.

#include <string>
#include <utility>
#include <vector>

#include "concord/int_matrix.hpp"

namespace concord {

class SeifertForm {
public:
    SeifertForm() = default;
    explicit SeifertForm(IntMatrix v, std::string name = "")
        : v_(std::move(v)), name_(std::move(name)) {
        validate();
    }

    const IntMatrix& matrix() const { return v_; }
    const std::string& name() const { return name_; }
    std::size_t dim() const { return v_.rows(); }
    std::size_t genus() const { return v_.rows() / 2; }

    // mirror image: V -> -V^T
    SeifertForm mirror() const {
        return SeifertForm(-v_.transpose(), name_.empty() ? "" : "mirror(" + name_ + ")");
    }

    // connected sum: block direct sum of Seifert matrices
    SeifertForm direct_sum(const SeifertForm& o) const {
        std::size_t a = dim(), b = o.dim();
        IntMatrix s(a + b, a + b);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < a; ++j) s.at(i, j) = v_.at(i, j);
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) s.at(a + i, a + j) = o.v_.at(i, j);
        std::string nm;
        if (!name_.empty() && !o.name_.empty()) nm = name_ + " # " + o.name_;
        return SeifertForm(std::move(s), nm);
    }

private:
    void validate() const {
        if (!v_.is_square()) throw InvariantViolation("Seifert matrix must be square");
        if (v_.rows() % 2 != 0) throw InvariantViolation("Seifert matrix must have even dimension");
        if ((v_ - v_.transpose()).det() != 1)
            throw InvariantViolation("V - V^T must be unimodular (det = 1) for a Seifert matrix");
    }

    IntMatrix v_;
    std::string name_;
};

class Pattern {
public:
    Pattern() = default;
    Pattern(SeifertForm seifert, Int winding, std::vector<Int> axis_linking,
            std::string name = "")
        : seifert_(std::move(seifert)),
          winding_(std::move(winding)),
          axis_(std::move(axis_linking)),
          name_(std::move(name)) {
        if (axis_.size() != seifert_.dim())
            throw InvariantViolation("axis linking vector length must equal Seifert dimension");
    }

    const SeifertForm& seifert() const { return seifert_; }
    const Int& winding() const { return winding_; }
    const std::vector<Int>& axis_linking() const { return axis_; }
    const std::string& name() const { return name_; }

    // mirror pattern: S -> -S^T, axis vector unchanged
    Pattern mirror() const {
        return Pattern(seifert_.mirror(), winding_, axis_,
                       name_.empty() ? "" : "mirror(" + name_ + ")");
    }

private:
    SeifertForm seifert_;
    Int winding_ = 0;
    std::vector<Int> axis_;
    std::string name_;
};

// Linking matrix S + S^T of the surgery presentation of the branched double
// cover of P(U).  Its determinant is (up to sign) the determinant of the
// knot, hence odd; an even value signals a non-Seifert input.
inline IntMatrix branched_cover_matrix(const SeifertForm& s) {
    IntMatrix a = s.matrix() + s.matrix().transpose();
    Int d = a.det();
    if (mpz_even_p(d.get_mpz_t()))
        throw InvariantViolation("det(S + S^T) is even; input is not a Seifert matrix");
    return a;
}

// Rational self-linking number of the framed lift of the axis:
//   l = -lk(dD^2) (S + S^T)^{-1} lk(dD^2)^T.
inline Rational axis_self_linking(const Pattern& p) {
    if (sgn(p.winding()) != 0)
        throw NonzeroWinding("axis self-linking is defined for winding number zero patterns");
    IntMatrix a = p.seifert().matrix() + p.seifert().matrix().transpose();
    if (sgn(a.det()) == 0) throw SingularCover("S + S^T is singular");
    if (a.rows() == 0) return Rational(0);
    return -rational_inverse_apply(a, p.axis_linking());
}

// Intersection form of the 2-handle cobordism: Q_W = <pq + q^2 l>.
struct CobordismForm {
    Rational value;
    bool negative_definite;
};

inline CobordismForm cobordism_form(const Int& p, const Int& q, const Rational& l) {
    if (sgn(q) == 0) throw ZeroQ("cobordism form needs q != 0");
    Int pq = p * q, qq = q * q;
    Rational v = Rational(pq) + Rational(qq) * l;
    return {v, v.sign() < 0};
}

}  // namespace concord
