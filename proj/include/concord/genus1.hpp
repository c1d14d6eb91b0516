#pragma once
// Genus-1 patterns with trivial Alexander polynomial.  The Seifert form is
//   S = [[n, m], [m-1, l]]  with  n*l = m*(m-1),
// and the self-linking of an axis with dual coordinates (x, y) is the value
// of the quadratic form G = [[2l, 1-2m], [1-2m, 2n]], which always has
// determinant -1 on valid triples.

#include <algorithm>
#include <tuple>
#include <vector>

#include "concord/int_matrix.hpp"

namespace concord {

struct Genus1Triple {
    Int n, m, l;
};

inline void check_alexander_one(const Int& n, const Int& m, const Int& l) {
    if (n * l != m * (m - 1))
        throw NotAlexanderOne("need n*l = m*(m-1) for trivial Alexander polynomial");
}

inline IntMatrix genus1_form(const Int& n, const Int& m, const Int& l) {
    check_alexander_one(n, m, l);
    IntMatrix g(2, 2);
    g.at(0, 0) = 2 * l;
    g.at(0, 1) = 1 - 2 * m;
    g.at(1, 0) = 1 - 2 * m;
    g.at(1, 1) = 2 * n;
    return g;
}

inline Int genus1_value(const Int& n, const Int& m, const Int& l, const Int& x, const Int& y) {
    IntMatrix g = genus1_form(n, m, l);
    return g.at(0, 0) * x * x + (g.at(0, 1) + g.at(1, 0)) * x * y + g.at(1, 1) * y * y;
}

inline bool genus1_nonzero(const Int& n, const Int& m, const Int& l, const Int& x, const Int& y) {
    return sgn(genus1_value(n, m, l, x, y)) != 0;
}

// All triples with |m| <= max_m, |l| <= max_l and n*l = m*(m-1):
// n is solved when l != 0 divides m(m-1); when l = 0 (forcing m in {0, 1})
// n ranges freely over [-max_l, max_l].  Lexicographic in (n, m, l).
inline std::vector<Genus1Triple> genus1_enumerate(long max_m, long max_l) {
    if (max_m < 0 || max_l < 0) throw DomainError("genus1_enumerate needs nonnegative bounds");
    std::vector<Genus1Triple> out;
    for (long m = -max_m; m <= max_m; ++m) {
        Int mm = Int(m) * Int(m - 1);
        for (long l = -max_l; l <= max_l; ++l) {
            if (l == 0) {
                if (sgn(mm) != 0) continue;
                for (long n = -max_l; n <= max_l; ++n)
                    out.push_back({Int(n), Int(m), Int(0)});
            } else {
                if (!mpz_divisible_p(mm.get_mpz_t(), Int(l).get_mpz_t())) continue;
                Int n;
                mpz_divexact(n.get_mpz_t(), mm.get_mpz_t(), Int(l).get_mpz_t());
                out.push_back({n, Int(m), Int(l)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Genus1Triple& a, const Genus1Triple& b) {
        return std::tie(a.n, a.m, a.l) < std::tie(b.n, b.m, b.l);
    });
    return out;
}

}  // namespace concord
