#pragma once
// Seifert matrices of positive braid closures from the brick diagram of the
// fiber surface: one disk per strand, one band per crossing, and one H_1
// generator for each pair of consecutive crossings in the same column.  The
// local linking convention below was fixed against the torus-knot contract
// (unimodular V - V^T, Alexander polynomial identity, sigma(T(2,3))(-1) = -2).

#include <numeric>
#include <string>
#include <vector>

#include "concord/poly.hpp"
#include "concord/seifert.hpp"

namespace concord {

struct BraidWord {
    int strands = 0;
    std::vector<int> letters;  // positive generators sigma_i, 1 <= i < strands

    BraidWord(int p, std::vector<int> word) : strands(p), letters(std::move(word)) {
        if (strands < 2) throw InvalidTorusParams("braid needs at least two strands");
        if (letters.empty()) throw InvalidTorusParams("braid word must be nonempty");
        for (int i : letters)
            if (i < 1 || i >= strands)
                throw InvalidTorusParams("braid letter out of range");
    }
};

// Seifert matrix of the closure of a positive braid word whose closure is a
// knot (every column used at least twice keeps the fiber surface connected
// in the cases we build; the Seifert-form invariant is re-validated anyway).
inline SeifertForm seifert_from_positive_braid(const BraidWord& w, std::string name = "") {
    std::vector<std::vector<int>> cols(w.strands);
    for (std::size_t t = 0; t < w.letters.size(); ++t)
        cols[w.letters[t]].push_back(static_cast<int>(t));
    struct Brick {
        int col, s, e;
    };
    std::vector<Brick> bricks;
    for (int i = 1; i < w.strands; ++i)
        for (std::size_t j = 0; j + 1 < cols[i].size(); ++j)
            bricks.push_back({i, cols[i][j], cols[i][j + 1]});
    std::size_t m = bricks.size();
    IntMatrix v(m, m);
    for (std::size_t a = 0; a < m; ++a) v.at(a, a) = -1;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            const Brick& g = bricks[a];
            const Brick& h = bricks[b];
            if (g.col == h.col && g.e == h.s) {
                v.at(a, b) = 1;  // consecutive bricks, earlier over later
            } else if (h.col == g.col + 1) {
                if (g.s < h.s && h.s < g.e && g.e < h.e) v.at(b, a) = 1;
                if (h.s < g.s && g.s < h.e && h.e < g.e) v.at(b, a) = -1;
            }
        }
    return SeifertForm(std::move(v), std::move(name));
}

// Alexander polynomial of T(r,s): (z^{rs} - 1)(z - 1) / ((z^r - 1)(z^s - 1)).
inline IntPoly torus_alexander(long r, long s) {
    auto xn = [](long n) {
        std::vector<Int> c(n + 1, Int(0));
        c[0] = -1;
        c[n] = 1;
        return IntPoly(std::move(c));
    };
    return div_exact(div_exact(xn(r * s) * xn(1), xn(r)), xn(s));
}

namespace detail {
inline bool equal_up_to_unit(IntPoly a, IntPoly b) {
    auto norm = [](IntPoly p) {
        std::size_t v = 0;
        while (v < p.c.size() && sgn(p.c[v]) == 0) ++v;
        p.c.erase(p.c.begin(), p.c.begin() + v);
        if (!p.is_zero() && sgn(p.lead()) < 0) p = -p;
        return p;
    };
    return norm(std::move(a)) == norm(std::move(b));
}
}  // namespace detail

// Seifert form of the positive torus knot T(r,s) from the braid
// (sigma_1 ... sigma_{r-1})^s.  The result is contract-checked: dimension
// (r-1)(s-1), unimodular V - V^T, and the torus Alexander identity.
inline SeifertForm torus_seifert(long r, long s) {
    if (r < 2 || s < 2) throw InvalidTorusParams("torus knot needs r, s >= 2");
    if (std::gcd(r, s) != 1) throw InvalidTorusParams("torus knot needs gcd(r, s) = 1");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>((r - 1) * s));
    for (long k = 0; k < s; ++k)
        for (long i = 1; i < r; ++i) word.push_back(static_cast<int>(i));
    SeifertForm f = seifert_from_positive_braid(BraidWord(static_cast<int>(r), std::move(word)),
                                                "T(" + std::to_string(r) + "," +
                                                    std::to_string(s) + ")");
    if (f.dim() != static_cast<std::size_t>((r - 1) * (s - 1)))
        throw Error("internal: torus Seifert dimension mismatch");
    if (!detail::equal_up_to_unit(alexander_poly(f.matrix()), torus_alexander(r, s)))
        throw Error("internal: torus Alexander polynomial mismatch");
    return f;
}

}  // namespace concord
