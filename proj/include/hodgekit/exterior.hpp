#pragma once

// Exact exterior algebra over the complexified cotangent space of a
// Hermitian vector space of complex dimension n, in two bases:
//   real-orthonormal  x_1 < y_1 < x_2 < y_2 < ... < x_n < y_n
//   complex           z_A ^ zbar_B ^ w_M   (A, B, M pairwise disjoint,
//                                           w_mu = z_mu ^ zbar_mu)
// Words are bitmask sets; the canonical form of a product is the sorted
// word with a permutation sign, with exact-zero coefficients dropped so
// equality is structural.

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "hodgekit/error.hpp"
#include "hodgekit/gaussian.hpp"

namespace hodgekit {

// ---------------------------------------------------------------------------
// index sets

/// A strictly increasing set of indices in 1..n, stored as a bitmask
/// (bit mu-1 represents index mu).
struct IndexSet {
    std::uint32_t mask = 0;

    IndexSet() = default;
    explicit IndexSet(std::uint32_t m) : mask(m) {}
    IndexSet(std::initializer_list<int> idxs) {
        for (int i : idxs) {
            if (i < 1 || i > 32) throw RangeError("IndexSet: indices must lie in 1..32");
            mask |= (1u << (i - 1));
        }
    }

    int size() const { return std::popcount(mask); }
    bool contains(int mu) const { return (mask >> (mu - 1)) & 1u; }
    bool disjoint(const IndexSet& o) const { return (mask & o.mask) == 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int mu = 1; mu <= 32; ++mu)
            if (contains(mu)) out.push_back(mu);
        return out;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
};

// ---------------------------------------------------------------------------
// words

/// Letters of the real alphabet are encoded as 2*(mu-1) for x_mu and
/// 2*(mu-1)+1 for y_mu, so ascending letter order is the fixed global
/// alphabet order x_1 < y_1 < ... < x_n < y_n.
struct RealWord {
    std::uint64_t mask = 0;

    RealWord() = default;
    explicit RealWord(std::uint64_t m) : mask(m) {}

    static std::uint64_t x_bit(int mu) { return 1ull << (2 * (mu - 1)); }
    static std::uint64_t y_bit(int mu) { return 1ull << (2 * (mu - 1) + 1); }
    static RealWord x(int mu) { return RealWord(x_bit(mu)); }
    static RealWord y(int mu) { return RealWord(y_bit(mu)); }
    /// The volume word x_1^y_1^...^x_n^y_n.
    static RealWord volume(int n) { return RealWord((n == 32) ? ~0ull : ((1ull << (2 * n)) - 1)); }

    int degree() const { return std::popcount(mask); }

    std::vector<int> letters() const {
        std::vector<int> out;
        for (int b = 0; b < 64; ++b)
            if ((mask >> b) & 1ull) out.push_back(b);
        return out;
    }

    friend bool operator==(const RealWord&, const RealWord&) = default;
    friend auto operator<=>(const RealWord&, const RealWord&) = default;
};

/// Product of two real words in canonical form: +1/-1 sign and the union
/// mask, or sign 0 when a letter repeats.
struct SignedRealWord {
    int sign = 0;
    RealWord word;
};

inline SignedRealWord wedge_words(const RealWord& u, const RealWord& v) {
    if (u.mask & v.mask) return {0, RealWord()};
    // Sorting v's letters into u counts, for each letter b of v, the letters
    // of u above b; the parity of the total is the permutation sign.
    int inversions = 0;
    for (int b = 0; b < 63; ++b)
        if ((v.mask >> b) & 1ull) inversions += std::popcount(u.mask >> (b + 1));
    return {(inversions % 2 == 0) ? 1 : -1, RealWord(u.mask | v.mask)};
}

/// The complex basis word z_A ^ zbar_B ^ w_M. Its canonical letter
/// expansion lists z_mu for mu in A ascending, then zbar_nu for nu in B
/// ascending, then the pair z_mu, zbar_mu for mu in M ascending. Letter
/// slots are encoded 2*(mu-1) for z_mu and 2*(mu-1)+1 for zbar_mu.
struct ComplexWord {
    IndexSet A, B, M;

    ComplexWord() = default;
    ComplexWord(IndexSet a, IndexSet b, IndexSet m) : A(a), B(b), M(m) {
        if (!(A.disjoint(B) && A.disjoint(M) && B.disjoint(M)))
            throw ValidationError("ComplexWord: A, B, M must be pairwise disjoint");
    }

    int degree() const { return A.size() + B.size() + 2 * M.size(); }
    int bidegree_p() const { return A.size() + M.size(); }
    int bidegree_q() const { return B.size() + M.size(); }

    std::vector<int> canonical_letters() const {
        std::vector<int> out;
        for (int mu : A.elements()) out.push_back(2 * (mu - 1));
        for (int nu : B.elements()) out.push_back(2 * (nu - 1) + 1);
        for (int mu : M.elements()) {
            out.push_back(2 * (mu - 1));
            out.push_back(2 * (mu - 1) + 1);
        }
        return out;
    }

    friend bool operator==(const ComplexWord&, const ComplexWord&) = default;
    friend auto operator<=>(const ComplexWord&, const ComplexWord&) = default;
};

struct SignedComplexWord {
    int sign = 0;
    ComplexWord word;
};

/// Parity of the permutation carrying `from` to `to` (both orderings of the
/// same distinct elements).
inline int permutation_sign_between(const std::vector<int>& from, const std::vector<int>& to) {
    const std::size_t len = from.size();
    std::vector<int> perm(len);
    for (std::size_t j = 0; j < len; ++j) {
        std::size_t pos = 0;
        while (pos < len && from[pos] != to[j]) ++pos;
        perm[j] = static_cast<int>(pos);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < len; ++a)
        for (std::size_t b = a + 1; b < len; ++b)
            if (perm[a] > perm[b]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

inline SignedComplexWord wedge_words(const ComplexWord& u, const ComplexWord& v) {
    std::vector<int> seq = u.canonical_letters();
    for (int s : v.canonical_letters()) seq.push_back(s);
    std::uint64_t seen = 0;
    std::uint32_t zmask = 0, cmask = 0;
    for (int s : seq) {
        if ((seen >> s) & 1ull) return {0, ComplexWord()};
        seen |= (1ull << s);
        if (s % 2 == 0)
            zmask |= (1u << (s / 2));
        else
            cmask |= (1u << (s / 2));
    }
    ComplexWord result(IndexSet(zmask & ~cmask), IndexSet(cmask & ~zmask), IndexSet(zmask & cmask));
    int sign = permutation_sign_between(seq, result.canonical_letters());
    return {sign, result};
}

// ---------------------------------------------------------------------------
// forms

/// Finite linear combination of basis words with coefficients in an exact
/// ring (GaussianRational for constant forms; polynomial, Fourier, or
/// rational-function coefficients elsewhere). Zero coefficients are never
/// stored, so operator== is structural equality.
template <class Word, class Coeff>
struct BasicForm {
    int n = 0;
    std::map<Word, Coeff> terms;

    BasicForm() = default;
    explicit BasicForm(int dim) : n(dim) {}
    BasicForm(int dim, Word w, Coeff c) : n(dim) { add_term(w, c); }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Word& w, const Coeff& c) {
        if (is_zero_coeff(c)) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (is_zero_coeff(it->second)) terms.erase(it);
        }
    }

    Coeff coeff(const Word& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? Coeff{} : it->second;
    }

    friend BasicForm operator+(const BasicForm& a, const BasicForm& b) {
        check_same_space(a, b);
        BasicForm out = a;
        for (const auto& [w, c] : b.terms) out.add_term(w, c);
        return out;
    }
    friend BasicForm operator-(const BasicForm& a, const BasicForm& b) {
        check_same_space(a, b);
        BasicForm out = a;
        for (const auto& [w, c] : b.terms) out.add_term(w, negate_coeff(c));
        return out;
    }
    friend BasicForm operator-(const BasicForm& a) {
        BasicForm out(a.n);
        for (const auto& [w, c] : a.terms) out.terms.emplace(w, negate_coeff(c));
        return out;
    }
    friend bool operator==(const BasicForm& a, const BasicForm& b) {
        return a.n == b.n && a.terms == b.terms;
    }

    BasicForm scaled(const GaussianRational& s) const {
        BasicForm out(n);
        for (const auto& [w, c] : terms) out.add_term(w, scale(c, s));
        return out;
    }

    /// Multiply every coefficient by a coefficient-ring element.
    BasicForm coeff_scaled(const Coeff& s) const {
        BasicForm out(n);
        for (const auto& [w, c] : terms) out.add_term(w, c * s);
        return out;
    }

private:
    static bool is_zero_coeff(const Coeff& c) {
        using hodgekit::is_zero;
        return is_zero(c);
    }
    static Coeff negate_coeff(const Coeff& c) { return scale(c, gr(-1)); }
    static void check_same_space(const BasicForm& a, const BasicForm& b) {
        if (a.n != b.n) throw DimensionMismatchError("forms live over different n");
    }
};

template <class Word, class Coeff>
BasicForm<Word, Coeff> wedge(const BasicForm<Word, Coeff>& lhs, const BasicForm<Word, Coeff>& rhs) {
    if (lhs.n != rhs.n) throw DimensionMismatchError("wedge: mismatched ambient dimension");
    BasicForm<Word, Coeff> out(lhs.n);
    for (const auto& [wu, cu] : lhs.terms)
        for (const auto& [wv, cv] : rhs.terms) {
            auto sw = wedge_words(wu, wv);
            if (sw.sign == 0) continue;
            Coeff c = cu * cv;
            if (sw.sign < 0) c = scale(c, gr(-1));
            out.add_term(sw.word, c);
        }
    return out;
}

/// The wedge product is the ring product of the exterior algebra.
template <class Word, class Coeff>
BasicForm<Word, Coeff> operator*(const BasicForm<Word, Coeff>& lhs, const BasicForm<Word, Coeff>& rhs) {
    return wedge(lhs, rhs);
}

template <class Word, class Coeff>
BasicForm<Word, Coeff> project_degree(const BasicForm<Word, Coeff>& phi, int r) {
    if (r < 0 || r > 2 * phi.n) throw RangeError("project_degree: degree out of range");
    BasicForm<Word, Coeff> out(phi.n);
    for (const auto& [w, c] : phi.terms)
        if (w.degree() == r) out.terms.emplace(w, c);
    return out;
}

template <class Coeff>
BasicForm<ComplexWord, Coeff> project_bidegree(const BasicForm<ComplexWord, Coeff>& phi, int p, int q) {
    if (p < 0 || p > phi.n || q < 0 || q > phi.n)
        throw RangeError("project_bidegree: bidegree out of range");
    BasicForm<ComplexWord, Coeff> out(phi.n);
    for (const auto& [w, c] : phi.terms)
        if (w.bidegree_p() == p && w.bidegree_q() == q) out.terms.emplace(w, c);
    return out;
}

/// w = sum_r (-1)^r Pi_r, term-wise scaling by parity of total degree.
template <class Word, class Coeff>
BasicForm<Word, Coeff> weight_w(const BasicForm<Word, Coeff>& phi) {
    BasicForm<Word, Coeff> out(phi.n);
    for (const auto& [w, c] : phi.terms)
        out.add_term(w, scale(c, minus_one_power(w.degree())));
    return out;
}

/// J = sum_{p,q} i^{p-q} Pi_{p,q}; needs the complex representation.
template <class Coeff>
BasicForm<ComplexWord, Coeff> weight_J(const BasicForm<ComplexWord, Coeff>& phi) {
    BasicForm<ComplexWord, Coeff> out(phi.n);
    for (const auto& [w, c] : phi.terms)
        out.add_term(w, scale(c, i_power(w.bidegree_p() - w.bidegree_q())));
    return out;
}

// ---------------------------------------------------------------------------
// real <-> complex conversion: dz_mu = dx_mu + i dy_mu, dzbar_mu = dx_mu - i dy_mu

// scale_unit<Coeff>() produces the multiplicative unit of the coefficient
// ring; each ring specializes it.
template <class Coeff>
Coeff scale_unit();
template <>
inline GaussianRational scale_unit<GaussianRational>() {
    return gr(1);
}

template <class Coeff>
BasicForm<RealWord, Coeff> to_real(const BasicForm<ComplexWord, Coeff>& phi) {
    BasicForm<RealWord, Coeff> out(phi.n);
    for (const auto& [w, c] : phi.terms) {
        BasicForm<RealWord, Coeff> acc(phi.n, RealWord(), c);
        for (int slot : w.canonical_letters()) {
            const int mu = slot / 2 + 1;
            BasicForm<RealWord, Coeff> letter(phi.n);
            // z_mu = x_mu + i y_mu ; zbar_mu = x_mu - i y_mu
            letter.add_term(RealWord::x(mu), scale_unit<Coeff>());
            letter.add_term(RealWord::y(mu), scale(scale_unit<Coeff>(), (slot % 2 == 0) ? gr(0, 1) : gr(0, -1)));
            acc = wedge(acc, letter);
        }
        out = out + acc;
    }
    return out;
}

template <class Coeff>
BasicForm<ComplexWord, Coeff> to_complex(const BasicForm<RealWord, Coeff>& phi) {
    BasicForm<ComplexWord, Coeff> out(phi.n);
    const GaussianRational half{rat(1, 2), rat(0)};
    const GaussianRational minus_half_i{rat(0), rat(-1, 2)};
    const GaussianRational half_i{rat(0), rat(1, 2)};
    for (const auto& [w, c] : phi.terms) {
        BasicForm<ComplexWord, Coeff> acc(phi.n, ComplexWord(), c);
        for (int slot : w.letters()) {
            const int mu = slot / 2 + 1;
            const ComplexWord z(IndexSet({mu}), IndexSet(), IndexSet());
            const ComplexWord zbar(IndexSet(), IndexSet({mu}), IndexSet());
            BasicForm<ComplexWord, Coeff> letter(phi.n);
            if (slot % 2 == 0) {
                // x_mu = (z_mu + zbar_mu)/2
                letter.add_term(z, scale(scale_unit<Coeff>(), half));
                letter.add_term(zbar, scale(scale_unit<Coeff>(), half));
            } else {
                // y_mu = (z_mu - zbar_mu)/(2i) = -i/2 z_mu + i/2 zbar_mu
                letter.add_term(z, scale(scale_unit<Coeff>(), minus_half_i));
                letter.add_term(zbar, scale(scale_unit<Coeff>(), half_i));
            }
            acc = wedge(acc, letter);
        }
        out = out + acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// constant-coefficient forms and their Hermitian inner product

using Form = BasicForm<RealWord, GaussianRational>;
using ComplexForm = BasicForm<ComplexWord, GaussianRational>;

inline Form conjugated(const Form& phi) {
    Form out(phi.n);
    for (const auto& [w, c] : phi.terms) out.terms.emplace(w, c.conj());
    return out;
}

/// Squared norm of a complex basis word: each z or zbar factor contributes
/// 2, each w factor contributes 4 (from w_mu = -2i x_mu ^ y_mu).
inline Rational word_norm_sq(const ComplexWord& w) {
    Rational g = rat(1);
    for (int k = 0; k < w.A.size() + w.B.size(); ++k) g *= rat(2);
    for (int k = 0; k < w.M.size(); ++k) g *= rat(4);
    return g;
}

/// Hermitian inner product, conjugate-linear in the second slot; the real
/// words are an orthonormal basis.
inline GaussianRational inner_product(const Form& a, const Form& b) {
    if (a.n != b.n) throw DimensionMismatchError("inner_product: mismatched n");
    GaussianRational acc;
    for (const auto& [w, c] : a.terms) {
        auto it = b.terms.find(w);
        if (it != b.terms.end()) acc += c * it->second.conj();
    }
    return acc;
}

/// Same product computed in the complex basis; distinct basis words are
/// orthogonal with squared norms 2^(a+b) 4^m.
inline GaussianRational inner_product(const ComplexForm& a, const ComplexForm& b) {
    if (a.n != b.n) throw DimensionMismatchError("inner_product: mismatched n");
    GaussianRational acc;
    for (const auto& [w, c] : a.terms) {
        auto it = b.terms.find(w);
        if (it != b.terms.end()) acc += c * it->second.conj() * GaussianRational(word_norm_sq(w));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// basis enumeration

inline std::vector<RealWord> all_real_words(int n) {
    std::vector<RealWord> out;
    out.reserve(std::size_t(1) << (2 * n));
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << (2 * n)); ++m) out.emplace_back(m);
    return out;
}

/// All 4^n complex words: each index mu is absent or in exactly one of A, B, M.
inline std::vector<ComplexWord> all_complex_words(int n) {
    std::vector<ComplexWord> out;
    std::uint64_t total = 1;
    for (int k = 0; k < n; ++k) total *= 4;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint32_t a = 0, b = 0, m = 0;
        std::uint64_t c = code;
        for (int mu = 0; mu < n; ++mu) {
            switch (c % 4) {
                case 1: a |= (1u << mu); break;
                case 2: b |= (1u << mu); break;
                case 3: m |= (1u << mu); break;
                default: break;
            }
            c /= 4;
        }
        out.emplace_back(IndexSet(a), IndexSet(b), IndexSet(m));
    }
    return out;
}

/// Index of a complex word in the all_complex_words(n) enumeration.
inline std::size_t complex_word_index(const ComplexWord& w, int n) {
    std::size_t code = 0, base = 1;
    for (int mu = 0; mu < n; ++mu) {
        int digit = 0;
        if (w.A.mask >> mu & 1u) digit = 1;
        else if (w.B.mask >> mu & 1u) digit = 2;
        else if (w.M.mask >> mu & 1u) digit = 3;
        code += base * digit;
        base *= 4;
    }
    return code;
}

// ---------------------------------------------------------------------------
// conversion-sign lemma report
//
// The closed form (-1)^(m(p+q) + floor(m/2) + tau_{I,K}) for rewriting
// z_I ^ zbar_K as z_A ^ zbar_B ^ w_M is checked against the brute-force
// permutation sign; the brute-force sign is authoritative.

struct ConversionSignReport {
    int n = 0;
    int pairs_checked = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> mismatches;           // closed-form exponent
    std::vector<std::pair<std::uint32_t, std::uint32_t>> corrected_mismatches; // exponent + b*m
    bool closed_form_matches() const { return mismatches.empty(); }
    bool corrected_form_matches() const { return corrected_mismatches.empty(); }
};

/// Checks the closed-form exponent m(p+q) + floor(m/2) + tau_{I,K} against
/// the brute-force permutation sign for every pair (I, K), and also the
/// variant with an extra b*m term (b = |K - I|), which is what the
/// brute-force signs actually satisfy.
inline ConversionSignReport conversion_sign_report(int n) {
    ConversionSignReport rep;
    rep.n = n;
    for (std::uint32_t imask = 0; imask < (1u << n); ++imask)
        for (std::uint32_t kmask = 0; kmask < (1u << n); ++kmask) {
            IndexSet I(imask), K(kmask);
            ComplexWord zi{I, IndexSet(), IndexSet()};
            ComplexWord zk{IndexSet(), K, IndexSet()};
            auto sw = wedge_words(zi, zk);
            const int m = std::popcount(imask & kmask);
            const int p = std::popcount(imask);
            const int q = std::popcount(kmask);
            const int b = q - m;
            int tau = 0;
            auto rank_in = [](int mu, std::uint32_t mask) {
                int r = 0;
                for (int j = 1; j <= mu; ++j)
                    if ((mask >> (j - 1)) & 1u) ++r;
                return r;
            };
            for (int mu = 1; mu <= n; ++mu)
                if (((imask & kmask) >> (mu - 1)) & 1u) tau += rank_in(mu, imask) + rank_in(mu, kmask);
            const int closed = ((m * (p + q) + m / 2 + tau) % 2 == 0) ? 1 : -1;
            const int corrected = ((m * (p + q) + m / 2 + tau + b * m) % 2 == 0) ? 1 : -1;
            ++rep.pairs_checked;
            if (closed != sw.sign) rep.mismatches.emplace_back(imask, kmask);
            if (corrected != sw.sign) rep.corrected_mismatches.emplace_back(imask, kmask);
        }
    return rep;
}

} // namespace hodgekit
