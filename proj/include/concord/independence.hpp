#pragma once
// Z-linear independence of jump functions: collate the spectra of a family of
// knots over the union of their root angles (exact key matching, including
// irrational angles via gcd-and-bracket identity) and take the exact rank of
// the integer jump-vector matrix.

#include <vector>

#include "concord/jumps.hpp"

namespace concord {

inline std::size_t independence_rank(const std::vector<SeifertForm>& knots,
                                     unsigned long prec = 64) {
    if (knots.empty()) throw DomainError("independence_rank needs a nonempty family");
    std::vector<JumpSpectrum> spectra;
    spectra.reserve(knots.size());
    for (const auto& k : knots) spectra.push_back(jump_spectrum(k, prec));

    // union of angle keys
    std::vector<AngleKey> pool;
    std::vector<std::vector<std::pair<std::size_t, long>>> rows(knots.size());
    for (std::size_t r = 0; r < spectra.size(); ++r) {
        for (const auto& e : spectra[r]) {
            std::size_t idx = pool.size();
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (keys_equal(pool[i], e.key)) {
                    idx = i;
                    break;
                }
            if (idx == pool.size()) pool.push_back(e.key);
            rows[r].emplace_back(idx, e.jump);
        }
    }

    IntMatrix m(knots.size(), pool.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, j] : rows[r]) m.at(r, c) = m.at(r, c) + Int(j);
    return m.rank();
}

}  // namespace concord
