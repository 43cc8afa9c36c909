#pragma once

// Coefficient rings for forms with non-constant coefficients:
//   PolyCoefficient    polynomials in z_1..z_n and their formal conjugates
//                      (read as x/y exponents in the real representation)
//   FourierCoefficient finite Fourier series sum_k c_k exp(i k.x) on the
//                      flat torus R^d / 2 pi Z^d
// Exponent and frequency vectors are kept with trailing zeros trimmed so a
// constant is the empty vector and arities mix freely.

#include <map>
#include <vector>

#include "hodgekit/exterior.hpp"
#include "hodgekit/gaussian.hpp"

namespace hodgekit {

inline void trim_trailing_zeros(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<int> padded_sum(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim_trailing_zeros(out);
    return out;
}

inline int component(const std::vector<int>& v, std::size_t j) {
    return j < v.size() ? v[j] : 0;
}

// ---------------------------------------------------------------------------
// polynomials

/// Monomial z^ze * zbar^ce (or x^ze * y^ce in the real reading).
struct PolyMonomial {
    std::vector<int> ze, ce;

    PolyMonomial() = default;
    PolyMonomial(std::vector<int> z, std::vector<int> c) : ze(std::move(z)), ce(std::move(c)) {
        trim_trailing_zeros(ze);
        trim_trailing_zeros(ce);
    }

    friend bool operator==(const PolyMonomial&, const PolyMonomial&) = default;
    friend auto operator<=>(const PolyMonomial&, const PolyMonomial&) = default;
};

struct PolyCoefficient {
    std::map<PolyMonomial, GaussianRational> terms;

    PolyCoefficient() = default;
    explicit PolyCoefficient(const GaussianRational& c) {
        if (!c.is_zero()) terms.emplace(PolyMonomial{}, c);
    }

    static PolyCoefficient constant(const GaussianRational& c) { return PolyCoefficient(c); }
    /// z_j (1-based).
    static PolyCoefficient var_z(int j) {
        std::vector<int> e(std::size_t(j), 0);
        e[std::size_t(j - 1)] = 1;
        PolyCoefficient p;
        p.terms.emplace(PolyMonomial{e, {}}, gr(1));
        return p;
    }
    /// zbar_j (1-based).
    static PolyCoefficient var_c(int j) {
        std::vector<int> e(std::size_t(j), 0);
        e[std::size_t(j - 1)] = 1;
        PolyCoefficient p;
        p.terms.emplace(PolyMonomial{{}, e}, gr(1));
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == PolyMonomial{});
    }

    void add_term(const PolyMonomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend PolyCoefficient operator+(const PolyCoefficient& a, const PolyCoefficient& b) {
        PolyCoefficient out = a;
        for (const auto& [m, c] : b.terms) out.add_term(m, c);
        return out;
    }
    friend PolyCoefficient operator-(const PolyCoefficient& a, const PolyCoefficient& b) {
        PolyCoefficient out = a;
        for (const auto& [m, c] : b.terms) out.add_term(m, -c);
        return out;
    }
    friend PolyCoefficient operator-(const PolyCoefficient& a) {
        PolyCoefficient out;
        for (const auto& [m, c] : a.terms) out.terms.emplace(m, -c);
        return out;
    }
    friend PolyCoefficient operator*(const PolyCoefficient& a, const PolyCoefficient& b) {
        PolyCoefficient out;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms)
                out.add_term(PolyMonomial{padded_sum(ma.ze, mb.ze), padded_sum(ma.ce, mb.ce)}, ca * cb);
        return out;
    }
    friend bool operator==(const PolyCoefficient&, const PolyCoefficient&) = default;
};

inline bool is_zero(const PolyCoefficient& p) { return p.is_zero(); }
inline PolyCoefficient scale(const PolyCoefficient& p, const GaussianRational& s) {
    PolyCoefficient out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : p.terms) out.terms.emplace(m, c * s);
    return out;
}
/// Conjugation swaps z with zbar and conjugates scalars.
inline PolyCoefficient conj_coeff(const PolyCoefficient& p) {
    PolyCoefficient out;
    for (const auto& [m, c] : p.terms) out.add_term(PolyMonomial{m.ce, m.ze}, c.conj());
    return out;
}
template <>
inline PolyCoefficient scale_unit<PolyCoefficient>() {
    return PolyCoefficient(gr(1));
}

/// Formal derivative in z_j (1-based); with the real reading this is d/dx_j.
inline PolyCoefficient d_dz(const PolyCoefficient& p, int j) {
    PolyCoefficient out;
    const std::size_t idx = std::size_t(j - 1);
    for (const auto& [m, c] : p.terms) {
        const int e = component(m.ze, idx);
        if (e == 0) continue;
        std::vector<int> ze = m.ze;
        ze[idx] -= 1;
        out.add_term(PolyMonomial{std::move(ze), m.ce}, c * gr(e));
    }
    return out;
}

/// Formal derivative in zbar_j (1-based); real reading d/dy_j.
inline PolyCoefficient d_dc(const PolyCoefficient& p, int j) {
    PolyCoefficient out;
    const std::size_t idx = std::size_t(j - 1);
    for (const auto& [m, c] : p.terms) {
        const int e = component(m.ce, idx);
        if (e == 0) continue;
        std::vector<int> ce = m.ce;
        ce[idx] -= 1;
        out.add_term(PolyMonomial{m.ze, std::move(ce)}, c * gr(e));
    }
    return out;
}

/// Evaluate with z_j = zvals[j-1], zbar_j = cvals[j-1].
inline GaussianRational eval(const PolyCoefficient& p, const std::vector<GaussianRational>& zvals,
                             const std::vector<GaussianRational>& cvals) {
    GaussianRational acc;
    for (const auto& [m, c] : p.terms) {
        GaussianRational t = c;
        for (std::size_t j = 0; j < m.ze.size(); ++j) t *= zvals.at(j).pow(m.ze[j]);
        for (std::size_t j = 0; j < m.ce.size(); ++j) t *= cvals.at(j).pow(m.ce[j]);
        acc += t;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Fourier series on the torus

/// Finite map k -> c_k representing sum_k c_k exp(i k.x); coordinates are
/// ordered x_1, y_1, ..., x_n, y_n on a complex n-torus (or plain x_1..x_d).
struct FourierCoefficient {
    std::map<std::vector<int>, GaussianRational> modes;

    FourierCoefficient() = default;
    explicit FourierCoefficient(const GaussianRational& c) {
        if (!c.is_zero()) modes.emplace(std::vector<int>{}, c);
    }

    static FourierCoefficient constant(const GaussianRational& c) { return FourierCoefficient(c); }
    static FourierCoefficient mode(std::vector<int> k, const GaussianRational& c) {
        FourierCoefficient f;
        trim_trailing_zeros(k);
        if (!c.is_zero()) f.modes.emplace(std::move(k), c);
        return f;
    }

    bool is_zero() const { return modes.empty(); }

    void add_mode(std::vector<int> k, const GaussianRational& c) {
        if (c.is_zero()) return;
        trim_trailing_zeros(k);
        auto it = modes.find(k);
        if (it == modes.end()) {
            modes.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) modes.erase(it);
        }
    }

    friend FourierCoefficient operator+(const FourierCoefficient& a, const FourierCoefficient& b) {
        FourierCoefficient out = a;
        for (const auto& [k, c] : b.modes) out.add_mode(k, c);
        return out;
    }
    friend FourierCoefficient operator-(const FourierCoefficient& a, const FourierCoefficient& b) {
        FourierCoefficient out = a;
        for (const auto& [k, c] : b.modes) out.add_mode(k, -c);
        return out;
    }
    friend FourierCoefficient operator-(const FourierCoefficient& a) {
        FourierCoefficient out;
        for (const auto& [k, c] : a.modes) out.modes.emplace(k, -c);
        return out;
    }
    /// Pointwise product: convolution of mode supports.
    friend FourierCoefficient operator*(const FourierCoefficient& a, const FourierCoefficient& b) {
        FourierCoefficient out;
        for (const auto& [ka, ca] : a.modes)
            for (const auto& [kb, cb] : b.modes) out.add_mode(padded_sum(ka, kb), ca * cb);
        return out;
    }
    friend bool operator==(const FourierCoefficient&, const FourierCoefficient&) = default;
};

inline bool is_zero(const FourierCoefficient& f) { return f.is_zero(); }
inline FourierCoefficient scale(const FourierCoefficient& f, const GaussianRational& s) {
    FourierCoefficient out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : f.modes) out.modes.emplace(k, c * s);
    return out;
}
/// conj(sum c_k e^{ikx}) = sum conj(c_k) e^{-ikx}.
inline FourierCoefficient conj_coeff(const FourierCoefficient& f) {
    FourierCoefficient out;
    for (const auto& [k, c] : f.modes) {
        std::vector<int> nk = k;
        for (int& v : nk) v = -v;
        out.add_mode(std::move(nk), c.conj());
    }
    return out;
}
template <>
inline FourierCoefficient scale_unit<FourierCoefficient>() {
    return FourierCoefficient(gr(1));
}

/// d/dx_j (1-based coordinate index): mode k picks up a factor i k_j.
inline FourierCoefficient d_dx(const FourierCoefficient& f, int j) {
    FourierCoefficient out;
    const std::size_t idx = std::size_t(j - 1);
    for (const auto& [k, c] : f.modes) {
        const int kj = component(k, idx);
        if (kj == 0) continue;
        out.add_mode(k, c * gr(0, kj));
    }
    return out;
}

/// |k|^2 mode multiplier and related helpers.
inline Rational mode_norm_sq(const std::vector<int>& k) {
    Rational s = rat(0);
    for (int v : k) s += rat(v) * rat(v);
    return s;
}

} // namespace hodgekit
