// hermitian_signature and alexander_nonvanishing
#include <doctest.h>

#include "concord/concord.hpp"
#include "oracles.hpp"

using namespace concord;

namespace {
const IntMatrix kTrefoil{{-1, 1}, {0, -1}};
}

TEST_CASE("alexander_nonvanishing worked examples") {
    CHECK_FALSE(alexander_nonvanishing(kTrefoil, CircleAngle(1, 6)));
    CHECK(alexander_nonvanishing(kTrefoil, CircleAngle(1, 2)));
    CHECK(alexander_nonvanishing(IntMatrix(), CircleAngle(1, 3)));
    CHECK(alexander_nonvanishing(kTrefoil, CircleAngle(5, 6)) == false);  // conjugate root
    CHECK(alexander_nonvanishing(kTrefoil, CircleAngle(1, 7)));
}

TEST_CASE("hermitian_signature worked examples") {
    CHECK(hermitian_signature(kTrefoil, CircleAngle(1, 2)) == -2);
    CHECK(hermitian_signature(kTrefoil, CircleAngle(1, 12)) == 0);
    CHECK(hermitian_signature(IntMatrix(), CircleAngle(1, 3)) == 0);
    CHECK_THROWS_AS(hermitian_signature(kTrefoil, CircleAngle(1, 6)), SingularAtRoot);
    CHECK_THROWS_AS(hermitian_signature(kTrefoil, CircleAngle(0, 1)), AngleOne);
}

TEST_CASE("signature survives an identically-zero diagonal") {
    // genus-1 unknot surface: diagonal of H vanishes for every angle
    IntMatrix v{{0, 1}, {0, 0}};
    for (long n : {3l, 5l, 8l, 1000003l})
        CHECK(hermitian_signature(v, CircleAngle(1, n)) == 0);
}

TEST_CASE("signature properties: transpose invariance and mirror negation") {
    oracle::Rng rng(0xabcde);
    int done = 0;
    while (done < 40) {
        SeifertForm f = oracle::random_seifert(rng, static_cast<std::size_t>(rng.range(1, 3)));
        CircleAngle t(rng.range(1, 23), 24);
        if (t.is_one() || !alexander_nonvanishing(f.matrix(), t)) continue;
        int s = hermitian_signature(f.matrix(), t);
        CHECK(hermitian_signature(f.matrix().transpose(), t) == s);
        CHECK(hermitian_signature(-f.matrix().transpose(), t) == -s);
        CHECK((s % 2 + 2) % 2 == static_cast<int>(f.dim() % 2));
        ++done;
    }
}

TEST_CASE("signature agrees with certified floating eigenvalue count") {
    oracle::Rng rng(0xf10a7);
    int done = 0;
    while (done < 40) {
        SeifertForm f = oracle::random_seifert(rng, static_cast<std::size_t>(rng.range(1, 3)));
        CircleAngle t(rng.range(1, 96), 97);
        if (!alexander_nonvanishing(f.matrix(), t)) continue;
        int expect;
        if (!oracle::float_signature(f.matrix(), t, expect)) continue;  // oracle inconclusive
        CHECK(hermitian_signature(f.matrix(), t) == expect);
        ++done;
    }
}

TEST_CASE("torus knot signatures match the lattice window count") {
    for (auto [r, s] : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
        SeifertForm k = torus_seifert(r, s);
        oracle::Rng rng(static_cast<std::uint64_t>(100 * r + s));
        int checked = 0;
        while (checked < 12) {
            Rational t(rng.range(1, 599), 1200);
            CircleAngle z = CircleAngle::from_rational(t);
            if (!alexander_nonvanishing(k.matrix(), z)) continue;
            CHECK(hermitian_signature(k.matrix(), z) ==
                  oracle::torus_signature_window(r, s, t));
            ++checked;
        }
    }
}
