// positive braid Seifert matrices and torus knots
#include <doctest.h>

#include "concord/concord.hpp"
#include "oracles.hpp"

using namespace concord;

TEST_CASE("torus_seifert parameter validation") {
    CHECK_THROWS_AS(torus_seifert(2, 2), InvalidTorusParams);
    CHECK_THROWS_AS(torus_seifert(4, 6), InvalidTorusParams);
    CHECK_THROWS_AS(torus_seifert(1, 5), InvalidTorusParams);
    CHECK_THROWS_AS(torus_seifert(2, 0), InvalidTorusParams);
}

TEST_CASE("trefoil Seifert matrix from the braid (sigma_1)^3") {
    SeifertForm t = torus_seifert(2, 3);
    CHECK(t.matrix() == IntMatrix{{-1, 1}, {0, -1}});
    CHECK(t.name() == "T(2,3)");
}

TEST_CASE("torus Alexander identity holds for all coprime rs <= 30") {
    int checked = 0;
    for (long r = 2; r * (r + 1) <= 30; ++r)
        for (long s = r + 1; r * s <= 30; ++s) {
            if (std::gcd(r, s) != 1) continue;
            SeifertForm k = torus_seifert(r, s);  // contract-checked inside
            CHECK(k.dim() == static_cast<std::size_t>((r - 1) * (s - 1)));
            CHECK((k.matrix() - k.matrix().transpose()).det() == 1);
            ++checked;
        }
    CHECK(checked >= 14);
}

TEST_CASE("T(2,5) has the cyclotomic Alexander polynomial z^4 - z^3 + z^2 - z + 1") {
    SeifertForm k = torus_seifert(2, 5);
    CHECK(alexander_poly(k.matrix()) == IntPoly::from_longs({1, -1, 1, -1, 1}));
}

TEST_CASE("braid word validation") {
    CHECK_THROWS_AS(BraidWord(1, {1}), InvalidTorusParams);
    CHECK_THROWS_AS(BraidWord(3, {}), InvalidTorusParams);
    CHECK_THROWS_AS(BraidWord(3, {3}), InvalidTorusParams);
    // a positive braid that is not a torus word still gives a Seifert matrix
    SeifertForm f = seifert_from_positive_braid(BraidWord(3, {1, 1, 2, 1, 2, 2}));
    CHECK((f.matrix() - f.matrix().transpose()).det() == 1);
}

TEST_CASE("torus signatures from the brick form match the window oracle") {
    for (auto [r, s] : std::vector<std::pair<long, long>>{{2, 3}, {2, 7}, {3, 4}, {4, 5}, {5, 6}}) {
        SeifertForm k = torus_seifert(r, s);
        CHECK(tl_signature(k, CircleAngle(1, 2)) ==
              oracle::torus_signature_window(r, s, Rational(1, 2)));
    }
}
