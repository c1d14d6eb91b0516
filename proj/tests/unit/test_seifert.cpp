// seifert_core: forms, patterns, branched covers, axis self-linking, the
// cobordism form, genus-1 machinery and surgery linking numbers
#include <doctest.h>

#include "concord/concord.hpp"
#include "oracles.hpp"

using namespace concord;

namespace {
Pattern twist_pattern(long k, std::vector<Int> axis = {Int(1), Int(0)}) {
    return Pattern(SeifertForm(IntMatrix{{k, 0}, {-1, -1}}), Int(0), std::move(axis),
                   "twist-" + std::to_string(k));
}
}  // namespace

TEST_CASE("SeifertForm validation") {
    CHECK_NOTHROW(SeifertForm(IntMatrix{{-1, 1}, {0, -1}}));
    CHECK_NOTHROW(SeifertForm{IntMatrix()});
    CHECK_THROWS_AS(SeifertForm(IntMatrix{{1, 0}, {0, 1}}), InvariantViolation);  // symmetric
    CHECK_THROWS_AS(SeifertForm(IntMatrix{{1}}), InvariantViolation);             // odd dim
}

TEST_CASE("branched_cover_matrix worked examples") {
    IntMatrix a = branched_cover_matrix(SeifertForm(IntMatrix{{2, 0}, {-1, -1}}));
    CHECK(a == IntMatrix{{4, -1}, {-1, -2}});
    CHECK(a.det() == -9);
    CHECK(branched_cover_matrix(SeifertForm(IntMatrix())).det() == 1);
    IntMatrix b = branched_cover_matrix(SeifertForm(IntMatrix{{1, 2}, {1, 2}}));
    CHECK(b == IntMatrix{{2, 3}, {3, 4}});
    CHECK(b.det() == -1);
}

TEST_CASE("branched cover determinant is always odd") {
    oracle::Rng rng(0x0dd);
    for (int i = 0; i < 120; ++i) {
        SeifertForm f = oracle::random_seifert(rng, static_cast<std::size_t>(rng.range(1, 3)));
        Int d = branched_cover_matrix(f).det();
        CHECK(mpz_odd_p(d.get_mpz_t()));
    }
}

TEST_CASE("axis_self_linking worked examples") {
    CHECK(axis_self_linking(twist_pattern(0)) == Rational(-2));
    CHECK(axis_self_linking(Pattern(SeifertForm(IntMatrix{{1, 2}, {1, 2}}), Int(0),
                                    {Int(-1), Int(1)})) == Rational(12));
    CHECK(axis_self_linking(twist_pattern(3, {Int(0), Int(0)})) == Rational(0));
    CHECK_THROWS_AS(
        axis_self_linking(Pattern(SeifertForm(IntMatrix()), Int(2), {})),
        NonzeroWinding);
}

TEST_CASE("twist family linking numbers") {
    for (long k = 0; k <= 20; ++k)
        CHECK(axis_self_linking(twist_pattern(k)) == Rational(-2, 4 * k + 1));
}

TEST_CASE("axis_self_linking is basis-change invariant") {
    oracle::Rng rng(0xbadbeef);
    int done = 0;
    while (done < 200) {
        std::size_t g = static_cast<std::size_t>(rng.range(1, 3));
        SeifertForm f = oracle::random_seifert(rng, g);
        std::vector<Int> v(2 * g);
        for (auto& x : v) x = Int(rng.range(-3, 3));
        Pattern p(f, Int(0), v);
        Rational l = axis_self_linking(p);

        IntMatrix u = oracle::random_unimodular(rng, 2 * g);
        IntMatrix s2 = u * f.matrix() * u.transpose();
        // axis vector transforms contravariantly: v -> v U^T means the new
        // coordinates w satisfy w = v U^{-1}... we transform as (U S U^T, v U^T)
        std::vector<Int> w(2 * g, Int(0));
        for (std::size_t i = 0; i < 2 * g; ++i)
            for (std::size_t j = 0; j < 2 * g; ++j) w[i] += v[j] * u.at(i, j);
        // w = U v as column, matching S -> U S U^T
        Pattern q(SeifertForm(std::move(s2)), Int(0), w);
        CHECK(axis_self_linking(q) == l);
        ++done;
    }
}

TEST_CASE("axis_self_linking mirror antisymmetry") {
    oracle::Rng rng(0x3141);
    for (int i = 0; i < 60; ++i) {
        std::size_t g = static_cast<std::size_t>(rng.range(1, 3));
        SeifertForm f = oracle::random_seifert(rng, g);
        std::vector<Int> v(2 * g);
        for (auto& x : v) x = Int(rng.range(-3, 3));
        Pattern p(f, Int(0), v);
        CHECK(axis_self_linking(p.mirror()) == -axis_self_linking(p));
    }
}

TEST_CASE("cobordism_form worked examples and sign law") {
    CHECK(cobordism_form(Int(1), Int(1), Rational(-2)).value == Rational(-1));
    CHECK(cobordism_form(Int(1), Int(1), Rational(-2)).negative_definite);
    // pq + q^2 l with (p,q) = (1,5): 5 + 25*(-2/9) = -5/9, negative definite
    CHECK(cobordism_form(Int(1), Int(5), Rational(-2, 9)).value == Rational(-5, 9));
    CHECK(cobordism_form(Int(1), Int(5), Rational(-2, 9)).negative_definite);
    CHECK(cobordism_form(Int(1), Int(1), Rational(0)).value == Rational(1));
    CHECK_FALSE(cobordism_form(Int(1), Int(1), Rational(0)).negative_definite);
    CHECK_THROWS_AS(cobordism_form(Int(1), Int(0), Rational(-2)), ZeroQ);

    oracle::Rng rng(0xc0b0);
    for (int i = 0; i < 100; ++i) {
        Int p(rng.range(1, 9)), q(rng.range(1, 9));
        Rational l(rng.range(-40, 40), rng.range(1, 12));
        CobordismForm c = cobordism_form(p, q, l);
        CHECK(c.negative_definite == (l < Rational(-p, q)));
    }
}

TEST_CASE("genus1_form worked examples") {
    CHECK(genus1_form(Int(1), Int(2), Int(2)) == IntMatrix{{4, -3}, {-3, 2}});
    CHECK(genus1_form(Int(0), Int(1), Int(5)) == IntMatrix{{10, -1}, {-1, 0}});
    CHECK(genus1_form(Int(0), Int(0), Int(0)) == IntMatrix{{0, 1}, {1, 0}});
    CHECK_THROWS_AS(genus1_form(Int(1), Int(2), Int(3)), NotAlexanderOne);
}

TEST_CASE("genus1_nonzero worked examples") {
    CHECK(genus1_nonzero(Int(1), Int(2), Int(2), Int(-1), Int(1)));
    CHECK_FALSE(genus1_nonzero(Int(1), Int(2), Int(2), Int(1), Int(1)));
    CHECK_FALSE(genus1_nonzero(Int(0), Int(1), Int(5), Int(0), Int(0)));
}

TEST_CASE("genus1_enumerate") {
    auto has = [](const std::vector<Genus1Triple>& v, long n, long m, long l) {
        for (const auto& t : v)
            if (t.n == n && t.m == m && t.l == l) return true;
        return false;
    };
    auto t22 = genus1_enumerate(2, 2);
    CHECK(has(t22, 1, 2, 2));
    CHECK(has(t22, 0, 0, 0));
    CHECK(has(genus1_enumerate(3, 6), 1, 3, 6));
    CHECK_THROWS_AS(genus1_enumerate(-1, 2), DomainError);
    // lexicographic and de-duplicated
    for (std::size_t i = 1; i < t22.size(); ++i) {
        auto& a = t22[i - 1];
        auto& b = t22[i];
        CHECK(std::tie(a.n, a.m, a.l) < std::tie(b.n, b.m, b.l));
    }
}

TEST_CASE("genus1_form determinant is -1 on enumerated triples") {
    auto triples = genus1_enumerate(5, 5);
    CHECK(triples.size() >= 100);
    for (const auto& t : triples) CHECK(genus1_form(t.n, t.m, t.l).det() == -1);
}

TEST_CASE("genus-1 quadratic form agrees with the linking formula") {
    // S = [[n, m], [m-1, l]] and axis (x, y): the two routes must agree
    oracle::Rng rng(0x9e9e);
    for (const auto& t : genus1_enumerate(3, 4)) {
        IntMatrix s(2, 2);
        s.at(0, 0) = t.n;
        s.at(0, 1) = t.m;
        s.at(1, 0) = t.m - 1;
        s.at(1, 1) = t.l;
        Int x(rng.range(-3, 3)), y(rng.range(-3, 3));
        Pattern p(SeifertForm(s), Int(0), {x, y});
        CHECK(axis_self_linking(p) == Rational(genus1_value(t.n, t.m, t.l, x, y)));
    }
}

TEST_CASE("surgery_linking worked examples") {
    SurgeryPresentation sp(IntMatrix{{0, -1}, {-1, -2}});
    sp.add_curve("eta", {Int(1), Int(0)});
    sp.add_curve("etap", {Int(1), Int(0)});
    sp.set_linking("eta", "etap", Int(1));  // lk_{S^3} = pq = 1 for the (1,1) curve
    CHECK(sp.linking("eta", "etap") == Rational(-1));

    SurgeryPresentation zero(IntMatrix{{1, 0}, {0, -1}});
    zero.add_curve("a", {Int(0), Int(0)});
    zero.add_curve("b", {Int(0), Int(0)});
    CHECK(zero.linking("a", "b") == Rational(0));

    SurgeryPresentation lens(IntMatrix{{-1}});
    lens.add_curve("mu", {Int(1)});
    lens.add_curve("mu2", {Int(1)});
    CHECK(lens.linking("mu", "mu2") == Rational(1));
    // self-linking of a framed curve: framing - v A^{-1} v^T
    lens.add_curve("framed", {Int(1)}, Int(3));
    CHECK(lens.linking("framed", "framed") == Rational(4));

    CHECK_THROWS_AS(sp.linking("eta", "nope"), UnknownCurve);
    CHECK_THROWS_AS(SurgeryPresentation(IntMatrix{{0, 1}, {2, 0}}), InvariantViolation);
}

TEST_CASE("surgery_linking symmetry") {
    oracle::Rng rng(0x5a5a);
    int done = 0;
    while (done < 40) {
        IntMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                Int x(rng.range(-3, 3));
                a.at(i, j) = x;
                a.at(j, i) = x;
            }
        if (sgn(a.det()) == 0) continue;
        SurgeryPresentation sp(a);
        std::vector<Int> u{Int(rng.range(-2, 2)), Int(rng.range(-2, 2)), Int(rng.range(-2, 2))};
        std::vector<Int> w{Int(rng.range(-2, 2)), Int(rng.range(-2, 2)), Int(rng.range(-2, 2))};
        sp.add_curve("u", u);
        sp.add_curve("w", w);
        sp.set_linking("u", "w", Int(rng.range(-2, 2)));
        CHECK(sp.linking("u", "w") == sp.linking("w", "u"));
        ++done;
    }
}

TEST_CASE("pattern invariants") {
    CHECK_THROWS_AS(Pattern(SeifertForm(IntMatrix{{-1, 1}, {0, -1}}), Int(0), {Int(1)}),
                    InvariantViolation);
    Pattern p(SeifertForm(IntMatrix{{-1, 1}, {0, -1}}), Int(3), {Int(0), Int(0)}, "w3");
    CHECK(p.winding() == 3);
}
