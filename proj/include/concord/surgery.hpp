#pragma once
// Framed-link surgery presentations of rational homology spheres and the
// Cha-Ko linking formula
//   lk(eta, eta') = lk_{S^3}(eta, eta') - lk(eta, L) A^{-1} lk(eta', L)^T.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "concord/int_matrix.hpp"

namespace concord {

class SurgeryPresentation {
public:
    explicit SurgeryPresentation(IntMatrix linking_matrix) : a_(std::move(linking_matrix)) {
        if (!a_.is_square() || !a_.is_symmetric())
            throw InvariantViolation("surgery linking matrix must be symmetric");
        if (sgn(a_.det()) == 0)
            throw InvariantViolation("surgery linking matrix must be nonsingular");
    }

    const IntMatrix& linking_matrix() const { return a_; }

    // framing doubles as lk_{S^3}(eta, eta) for the framed curve
    void add_curve(const std::string& name, std::vector<Int> lk_with_link, Int framing = 0) {
        if (lk_with_link.size() != a_.rows())
            throw DimensionMismatch("curve linking vector length must equal link size");
        curves_[name] = Curve{std::move(lk_with_link), std::move(framing)};
    }

    // S^3 linking number between two registered curves (unset pairs are 0)
    void set_linking(const std::string& x, const std::string& y, Int lk) {
        require(x);
        require(y);
        pairwise_[key(x, y)] = std::move(lk);
    }

    // rational linking number in the surgered manifold
    Rational linking(const std::string& eta, const std::string& eta_prime) const {
        const Curve& u = require(eta);
        const Curve& v = require(eta_prime);
        Rational lk0(0);
        if (eta == eta_prime) {
            lk0 = Rational(u.framing);
        } else {
            auto it = pairwise_.find(key(eta, eta_prime));
            if (it != pairwise_.end()) lk0 = Rational(it->second);
        }
        return lk0 - bilinear_inverse_apply(a_, u.lk, v.lk);
    }

private:
    struct Curve {
        std::vector<Int> lk;
        Int framing;
    };

    static std::pair<std::string, std::string> key(const std::string& x, const std::string& y) {
        return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
    }

    const Curve& require(const std::string& name) const {
        auto it = curves_.find(name);
        if (it == curves_.end()) throw UnknownCurve("no curve named \"" + name + "\"");
        return it->second;
    }

    IntMatrix a_;
    std::map<std::string, Curve> curves_;
    std::map<std::pair<std::string, std::string>, Int> pairwise_;
};

}  // namespace concord
