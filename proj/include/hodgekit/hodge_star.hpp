#pragma once

// Hodge dual on the exterior algebra, computed two independent ways:
// brute force in the real orthonormal basis (authoritative), and via the
// closed-form gamma factor in the complex basis (certified fast path).

#include <vector>

#include "hodgekit/exterior.hpp"

namespace hodgekit {

/// Dual of a single real word: the complement letters with the sign of the
/// permutation (word letters ascending, complement letters ascending).
inline SignedRealWord star_word(const RealWord& w, int n) {
    const std::uint64_t all = RealWord::volume(n).mask;
    const std::uint64_t comp = all & ~w.mask;
    int inversions = 0;
    for (int b = 0; b < 63; ++b)
        if ((comp >> b) & 1ull) inversions += std::popcount(w.mask >> (b + 1));
    return {(inversions % 2 == 0) ? 1 : -1, RealWord(comp)};
}

/// Linear extension of e_I -> sign * e_complement. Satisfies
/// a ^ *(conj b) = <a,b> vol for words of equal degree.
template <class Coeff>
BasicForm<RealWord, Coeff> star_real(const BasicForm<RealWord, Coeff>& phi) {
    BasicForm<RealWord, Coeff> out(phi.n);
    for (const auto& [w, c] : phi.terms) {
        auto sw = star_word(w, phi.n);
        out.add_term(sw.word, sw.sign < 0 ? scale(c, gr(-1)) : c);
    }
    return out;
}

/// gamma = i^(a-b) (-1)^(p(p+1)/2 + m) (-2i)^(p-n), p = a + b + 2m.
inline GaussianRational star_gamma(int a, int b, int m, int n) {
    const int p = a + b + 2 * m;
    GaussianRational g = i_power(a - b);
    g *= minus_one_power(p * (p + 1) / 2 + m);
    g *= GaussianRational{rat(0), rat(-2)}.pow(p - n);
    return g;
}

/// *(z_A ^ zbar_B ^ w_M) = gamma * (z_A ^ zbar_B ^ w_complement) where the
/// complement is {1..n} - (A u B u M).
template <class Coeff>
BasicForm<ComplexWord, Coeff> star_complex(const BasicForm<ComplexWord, Coeff>& phi) {
    const int n = phi.n;
    const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    BasicForm<ComplexWord, Coeff> out(n);
    for (const auto& [w, c] : phi.terms) {
        const std::uint32_t comp = all & ~(w.A.mask | w.B.mask | w.M.mask);
        ComplexWord dual(w.A, w.B, IndexSet(comp));
        out.add_term(dual, scale(c, star_gamma(w.A.size(), w.B.size(), w.M.size(), n)));
    }
    return out;
}

struct StarAgreementReport {
    int n = 0;
    int words_checked = 0;
    std::vector<ComplexWord> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Exhaustive cross-validation of the gamma formula against the real-basis
/// star on every complex basis word at dimension n.
inline StarAgreementReport check_star_agreement(int n) {
    if (n < 1) throw RangeError("check_star_agreement: n must be >= 1");
    StarAgreementReport rep;
    rep.n = n;
    for (const ComplexWord& w : all_complex_words(n)) {
        ComplexForm phi(n, w, gr(1));
        Form via_complex = to_real(star_complex(phi));
        Form via_real = star_real(to_real(phi));
        ++rep.words_checked;
        if (!(via_complex == via_real)) rep.mismatches.push_back(w);
    }
    return rep;
}

} // namespace hodgekit
