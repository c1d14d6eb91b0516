#pragma once
// Tristram-Levine signature as a step function on the circle: jump values,
// full jump spectra, and the root atlas behind them.
//
// The jump function is supported on the unit-circle roots of the Alexander
// polynomial Delta(z) = det(V - z V^T).  Roots at rational angles are exactly
// the cyclotomic factors of Delta; what remains is converted through
// c = z + 1/z into a real polynomial whose roots in (-2, 2) are isolated by
// Sturm bisection *in the angle variable*: the variation count at rational t
// is computable exactly because c(t) = 2 cos(2 pi t) is a real cyclotomic
// number with a decidable sign.  Jumps are then differences of exactly
// computed signatures at rational sample angles threaded between the roots.
//
// Spectra are stored on (0, 1/2] with the conjugation convention
// delta(1 - t) = delta(t); t = 1/2 never carries a jump since the knot
// determinant det(V + V^T) is odd.

#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "concord/cyclo_sign.hpp"
#include "concord/hermitian.hpp"
#include "concord/seifert.hpp"

namespace concord {

inline int tl_signature(const SeifertForm& k, const CircleAngle& t, unsigned long prec = 64) {
    return hermitian_signature(k.matrix(), t, prec);
}

// An isolated irrational-angle Alexander root: the squarefree non-cyclotomic
// trace polynomial plus a rational angle bracket containing exactly this root.
// Brackets refine on demand during comparisons; the identity is exact.
struct RootBox {
    IntPoly trace_poly;  // primitive, squarefree, positive leading coefficient
    std::shared_ptr<const SturmChain> chain;
    Rational lo, hi;  // lo < t* < hi, no other root of trace_poly in [lo, hi]

    // number of trace_poly roots with angle in (t1, t2], exact
    int count_between(const Rational& t1, const Rational& t2) const {
        return variations_at_angle(*chain, CircleAngle::from_rational(t2)) -
               variations_at_angle(*chain, CircleAngle::from_rational(t1));
    }

    void bisect() {
        Rational mid = (lo + hi) / Rational(2);
        if (count_between(lo, mid) == 1)
            hi = mid;
        else
            lo = mid;
    }

    // shrink bracket until the rational point r lies strictly outside [lo, hi]
    void separate_from(const Rational& r) {
        while (lo <= r && r <= hi) bisect();
    }
};

class AngleKey {
public:
    explicit AngleKey(CircleAngle a) : rational_(std::move(a)) {}
    explicit AngleKey(std::shared_ptr<RootBox> b) : box_(std::move(b)) {}

    bool is_rational() const { return rational_.has_value(); }
    const CircleAngle& rational() const { return *rational_; }
    const RootBox& box() const { return *box_; }
    RootBox& box() { return *box_; }
    const std::shared_ptr<RootBox>& box_ptr() const { return box_; }

    Rational lower() const { return is_rational() ? rational_->value() : box_->lo; }
    Rational upper() const { return is_rational() ? rational_->value() : box_->hi; }

private:
    std::optional<CircleAngle> rational_;
    std::shared_ptr<RootBox> box_;
};

// exact equality of angle keys, possibly across different knots
inline bool keys_equal(const AngleKey& a, const AngleKey& b) {
    if (a.is_rational() != b.is_rational()) return false;  // box roots are irrational
    if (a.is_rational()) return a.rational() == b.rational();
    const RootBox& x = *a.box_ptr();
    const RootBox& y = *b.box_ptr();
    if (a.box_ptr() == b.box_ptr()) return true;
    Rational lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
    if (!(lo < hi)) return false;
    IntPoly g = poly_gcd(x.trace_poly, y.trace_poly);
    if (g.deg() < 1) return false;
    SturmChain gc(g);
    return variations_at_angle(gc, CircleAngle::from_rational(hi)) -
               variations_at_angle(gc, CircleAngle::from_rational(lo)) >=
           1;
}

// strict ordering by angle; refines brackets as needed
inline bool key_less(AngleKey& a, AngleKey& b) {
    if (keys_equal(a, b)) return false;
    if (a.is_rational() && b.is_rational()) return a.rational() < b.rational();
    if (a.is_rational()) {
        Rational r = a.rational().value();
        b.box().separate_from(r);  // leaves r strictly outside [lo, hi]
        return r < b.box().lo;
    }
    if (b.is_rational()) {
        Rational r = b.rational().value();
        a.box().separate_from(r);
        return a.box().hi < r;
    }
    while (a.box().lo < b.box().hi && b.box().lo < a.box().hi) {
        if (a.box().hi - a.box().lo < b.box().hi - b.box().lo)
            b.box().bisect();
        else
            a.box().bisect();
    }
    return !(b.box().lo < a.box().hi);  // disjoint: a below iff a.hi <= b.lo
}

struct SpectrumEntry {
    AngleKey key;
    long jump;
};

using JumpSpectrum = std::vector<SpectrumEntry>;  // sorted by angle, jumps nonzero

// Everything known about the unit-circle Alexander roots of one Seifert form.
class RootAtlas {
public:
    explicit RootAtlas(const SeifertForm& form, unsigned long prec = 64)
        : form_(form), prec_(prec) {
        build();
    }

    // jump of the signature step function at angle t in (0, 1), with the
    // conjugation-symmetric convention; 0 off the Alexander roots
    int jump_at(const Rational& t) {
        if (!(Rational(0) < t && t < Rational(1)))
            throw DomainError("jump is defined on angles strictly between 0 and 1");
        Rational u = t <= Rational(1, 2) ? t : Rational(1) - t;
        for (std::size_t i = 0; i < events_.size(); ++i)
            if (events_[i].is_rational() && events_[i].rational().value() == u)
                return event_jump(i);
        return 0;
    }

    JumpSpectrum spectrum() {
        JumpSpectrum out;
        for (std::size_t i = 0; i < events_.size(); ++i) {
            int j = event_jump(i);
            if (j != 0) out.push_back({events_[i], j});
        }
        return out;
    }

    // all root angles in (0, 1/2], rational ones exactly
    const std::vector<AngleKey>& events() const { return events_; }

    std::size_t sample_count() const { return samples_.size(); }
    const Rational& sample(std::size_t i) const { return samples_[i]; }

private:
    void build() {
        IntPoly delta = alexander_poly(form_.matrix());
        if (delta.is_zero()) throw InvariantViolation("Alexander polynomial vanishes identically");
        // strip z^v (palindromicity holds on the full 0..dim coefficient range)
        std::size_t v = 0;
        while (v < delta.c.size() && sgn(delta.c[v]) == 0) ++v;
        if (v > 0) delta.c.erase(delta.c.begin(), delta.c.begin() + v);
        if (!delta.is_palindromic())
            throw Error("internal: Alexander polynomial is not palindromic");

        // cyclotomic factors <-> rational root angles
        long d = delta.deg();
        std::vector<Rational> rot;
        for (unsigned long n = 3; static_cast<long>(n) <= 2 * d * d + 6; ++n) {
            if (delta.deg() == 0) break;
            unsigned long phi = euler_phi(n);
            if (phi > static_cast<unsigned long>(delta.deg())) continue;
            const IntPoly& cyc = cyclotomic(n);
            bool divided = false;
            while (true) {
                auto [q, r] = divmod_monic(delta, cyc);
                if (!r.is_zero()) break;
                delta = q;
                divided = true;
            }
            if (divided)
                for (unsigned long a = 1; 2 * a < n; ++a)
                    if (std::gcd(a, n) == 1) rot.emplace_back(Int(static_cast<long>(a)),
                                                              Int(static_cast<long>(n)));
        }
        std::sort(rot.begin(), rot.end());

        // leftover factor: only irrational-angle circle roots
        std::vector<std::shared_ptr<RootBox>> boxes;
        if (delta.deg() > 0) {
            IntPoly q = trace_transform(delta);
            IntPoly qsf = squarefree_part(q);
            if (sgn(qsf.lead()) < 0) qsf = -qsf;
            if (qsf.deg() > 0) {
                auto chain = std::make_shared<SturmChain>(qsf);
                auto count = [&](const Rational& t1, const Rational& t2) {
                    return variations_at_angle(*chain, CircleAngle::from_rational(t2), prec_) -
                           variations_at_angle(*chain, CircleAngle::from_rational(t1), prec_);
                };
                std::vector<std::pair<Rational, Rational>> work;
                int total = count(Rational(0), Rational(1, 2));
                if (total > 0) work.emplace_back(Rational(0), Rational(1, 2));
                std::vector<std::pair<Rational, Rational>> isolated;
                while (!work.empty()) {
                    auto [lo, hi] = work.back();
                    work.pop_back();
                    int k = count(lo, hi);
                    if (k == 0) continue;
                    if (k == 1) {
                        isolated.emplace_back(lo, hi);
                        continue;
                    }
                    Rational mid = (lo + hi) / Rational(2);
                    work.emplace_back(lo, mid);
                    work.emplace_back(mid, hi);
                }
                for (auto& [lo, hi] : isolated) {
                    auto box = std::make_shared<RootBox>();
                    box->trace_poly = qsf;
                    box->chain = chain;
                    box->lo = lo;
                    box->hi = hi;
                    // keep the bracket inside (0, 1/2) and clear of rational roots
                    box->separate_from(Rational(0));
                    box->separate_from(Rational(1, 2));
                    for (const auto& r : rot) box->separate_from(r);
                    boxes.push_back(std::move(box));
                }
                std::sort(boxes.begin(), boxes.end(),
                          [](const auto& a, const auto& b) { return a->lo < b->lo; });
            }
        }

        // merge into the ordered event list
        std::size_t i = 0, j = 0;
        while (i < rot.size() || j < boxes.size()) {
            if (j == boxes.size() || (i < rot.size() && rot[i] < boxes[j]->lo))
                events_.push_back(AngleKey(CircleAngle::from_rational(rot[i++])));
            else
                events_.push_back(AngleKey(boxes[j++]));
        }

        // rational sample angles strictly separating consecutive events
        samples_.clear();
        if (!events_.empty()) {
            samples_.push_back(events_.front().lower() / Rational(2));
            for (std::size_t k = 0; k + 1 < events_.size(); ++k) {
                Rational u = events_[k].upper(), l = events_[k + 1].lower();
                samples_.push_back(u == l ? u : (u + l) / Rational(2));
            }
            samples_.push_back((events_.back().upper() + Rational(1, 2)) / Rational(2));
        }
        sigma_.assign(samples_.size(), std::nullopt);
    }

    int sigma_at_sample(std::size_t i) {
        if (!sigma_[i])
            sigma_[i] = tl_signature(form_, CircleAngle::from_rational(samples_[i]), prec_);
        return *sigma_[i];
    }

    int event_jump(std::size_t i) {
        int d = sigma_at_sample(i + 1) - sigma_at_sample(i);
        if (d % 2 != 0) throw Error("internal: odd signature step");
        return d / 2;
    }

    SeifertForm form_;
    unsigned long prec_;
    std::vector<AngleKey> events_;
    std::vector<Rational> samples_;
    std::vector<std::optional<int>> sigma_;
};

inline int jump_at(const SeifertForm& k, const Rational& t, unsigned long prec = 64) {
    RootAtlas atlas(k, prec);
    return atlas.jump_at(t);
}

inline JumpSpectrum jump_spectrum(const SeifertForm& k, unsigned long prec = 64) {
    RootAtlas atlas(k, prec);
    return atlas.spectrum();
}

// Litherland's satellite formula on jumps:
//   delta_{P(K)}(zeta) = delta_{P(U)}(zeta) + delta_K(zeta^w),
// with delta_K(1) = 0 (the Alexander polynomial is a unit at 1).
inline int litherland_jump(const Pattern& p, const SeifertForm& companion, const Rational& t) {
    if (!(Rational(0) < t && t < Rational(1)))
        throw DomainError("jump is defined on angles strictly between 0 and 1");
    int total = jump_at(p.seifert(), t);
    Rational wt = Rational(p.winding()) * t;
    // fractional part of w t
    Rational frac = wt - Rational(floor_div(wt.num(), wt.den()));
    if (!frac.is_zero()) total += jump_at(companion, frac);
    return total;
}

}  // namespace concord
