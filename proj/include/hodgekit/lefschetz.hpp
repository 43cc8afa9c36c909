#pragma once

// The Lefschetz triple L, L*, B on the exterior algebra for the standard
// Hermitian metric, with exhaustive verification of the sl(2,C) bracket
// relations. Operators are stored as sparse column maps over the 4^n
// complex basis words; composition is matrix product.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hodgekit/exterior.hpp"
#include "hodgekit/hodge_star.hpp"
#include "hodgekit/linalg.hpp"

namespace hodgekit {
namespace lefschetz {

/// Linear operator on the complex-word basis, kept sparse: cols[j] maps a
/// row index to the coefficient of word_j's image on word_row.
struct OperatorOnForms {
    int n = 0;
    std::vector<std::map<std::size_t, GaussianRational>> cols;

    explicit OperatorOnForms(int dim = 0) : n(dim) {
        std::size_t d = 1;
        for (int k = 0; k < dim; ++k) d *= 4;
        cols.resize(d);
    }

    std::size_t dim() const { return cols.size(); }

    static OperatorOnForms from_action(int n, const std::function<ComplexForm(const ComplexForm&)>& act) {
        OperatorOnForms op(n);
        const auto words = all_complex_words(n);
        for (std::size_t j = 0; j < words.size(); ++j) {
            ComplexForm image = act(ComplexForm(n, words[j], gr(1)));
            for (const auto& [w, c] : image.terms) op.cols[j][complex_word_index(w, n)] = c;
        }
        return op;
    }

    ComplexForm apply(const ComplexForm& phi) const {
        ComplexForm out(phi.n);
        const auto words = all_complex_words(n);
        for (const auto& [w, c] : phi.terms) {
            const std::size_t j = complex_word_index(w, n);
            for (const auto& [row, a] : cols[j]) out.add_term(words[row], a * c);
        }
        return out;
    }

    friend OperatorOnForms operator*(const OperatorOnForms& a, const OperatorOnForms& b) {
        OperatorOnForms out(a.n);
        for (std::size_t j = 0; j < b.cols.size(); ++j)
            for (const auto& [k, bkj] : b.cols[j])
                for (const auto& [row, aik] : a.cols[k]) {
                    auto& cell = out.cols[j][row];
                    cell += aik * bkj;
                    if (cell.is_zero()) out.cols[j].erase(row);
                }
        return out;
    }
    friend OperatorOnForms operator+(const OperatorOnForms& a, const OperatorOnForms& b) {
        OperatorOnForms out = a;
        for (std::size_t j = 0; j < b.cols.size(); ++j)
            for (const auto& [row, c] : b.cols[j]) {
                auto& cell = out.cols[j][row];
                cell += c;
                if (cell.is_zero()) out.cols[j].erase(row);
            }
        return out;
    }
    friend OperatorOnForms operator-(const OperatorOnForms& a, const OperatorOnForms& b) {
        return a + b.scaled(gr(-1));
    }
    OperatorOnForms scaled(const GaussianRational& s) const {
        OperatorOnForms out(n);
        if (s.is_zero()) return out;
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [row, c] : cols[j]) out.cols[j][row] = c * s;
        return out;
    }
    bool is_zero() const {
        for (const auto& col : cols)
            if (!col.empty()) return false;
        return true;
    }
    friend bool operator==(const OperatorOnForms& a, const OperatorOnForms& b) {
        return a.n == b.n && (a - b).is_zero();
    }
};

inline OperatorOnForms commutator(const OperatorOnForms& a, const OperatorOnForms& b) {
    return a * b - b * a;
}

/// Omega = (i/2) sum_{mu,nu} h_{mu nu} z_mu ^ zbar_nu for Hermitian h.
inline ComplexForm fundamental_form(const GrMat& h) {
    const int n = static_cast<int>(h.rows);
    if (h.rows != h.cols) throw ShapeError("fundamental_form: h must be square");
    for (std::size_t a = 0; a < h.rows; ++a)
        for (std::size_t b = 0; b < h.cols; ++b)
            if (!(h(a, b) == h(b, a).conj()))
                throw ValidationError("fundamental_form: h is not Hermitian");
    ComplexForm omega(n);
    const GaussianRational half_i{rat(0), rat(1, 2)};
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu) {
            ComplexWord pair = (mu == nu)
                                   ? ComplexWord(IndexSet(), IndexSet(), IndexSet({mu}))
                                   : ComplexWord(IndexSet({mu}), IndexSet({nu}), IndexSet());
            omega.add_term(pair, half_i * h(std::size_t(mu - 1), std::size_t(nu - 1)));
        }
    return omega;
}

inline ComplexForm standard_fundamental_form(int n) {
    return fundamental_form(GrMat::identity(std::size_t(n)));
}

/// L = Omega ^ ., standard metric h = I.
inline ComplexForm L_op(const ComplexForm& phi) {
    return wedge(standard_fundamental_form(phi.n), phi);
}

/// Closed form (i/2) sum_{mu not in M} z_A ^ zbar_B ^ w_{M + mu}; terms with
/// mu in A u B die in the wedge, so this matches L_op term for term.
inline ComplexForm L_closed_form(const ComplexForm& phi) {
    ComplexForm out(phi.n);
    const GaussianRational half_i{rat(0), rat(1, 2)};
    for (const auto& [w, c] : phi.terms)
        for (int mu = 1; mu <= phi.n; ++mu) {
            if (w.M.contains(mu) || w.A.contains(mu) || w.B.contains(mu)) continue;
            out.add_term(ComplexWord(w.A, w.B, IndexSet(w.M.mask | (1u << (mu - 1)))), half_i * c);
        }
    return out;
}

/// L* = (2/i) sum_{mu in M} z_A ^ zbar_B ^ w_{M - mu}  (2/i = -2i).
inline ComplexForm Lstar_op(const ComplexForm& phi) {
    ComplexForm out(phi.n);
    const GaussianRational minus_two_i{rat(0), rat(-2)};
    for (const auto& [w, c] : phi.terms)
        for (int mu : w.M.elements())
            out.add_term(ComplexWord(w.A, w.B, IndexSet(w.M.mask & ~(1u << (mu - 1)))), minus_two_i * c);
    return out;
}

/// L* computed through the defining route L* = w * L * : star, then L,
/// then star, then the weight operator.
inline ComplexForm Lstar_via_star(const ComplexForm& phi) {
    return weight_w(star_complex(L_op(star_complex(phi))));
}

/// B = sum_p (n - p) Pi_p.
inline ComplexForm B_op(const ComplexForm& phi) {
    ComplexForm out(phi.n);
    for (const auto& [w, c] : phi.terms)
        out.add_term(w, c * gr(phi.n - w.degree()));
    return out;
}

inline OperatorOnForms L_matrix(int n) {
    return OperatorOnForms::from_action(n, [](const ComplexForm& f) { return L_op(f); });
}
inline OperatorOnForms Lstar_matrix(int n) {
    return OperatorOnForms::from_action(n, [](const ComplexForm& f) { return Lstar_op(f); });
}
inline OperatorOnForms B_matrix(int n) {
    return OperatorOnForms::from_action(n, [](const ComplexForm& f) { return B_op(f); });
}

/// L* for a general Hermitian metric: the adjoint of Omega ^ . under the
/// Hermitian inner product, computed by Gram-conjugating the matrix of L.
inline OperatorOnForms adjoint_matrix(const OperatorOnForms& op) {
    OperatorOnForms out(op.n);
    const auto words = all_complex_words(op.n);
    // adjoint = G^{-1} A^dagger G with G = diag(word_norm_sq)
    for (std::size_t j = 0; j < op.cols.size(); ++j)
        for (const auto& [row, c] : op.cols[j]) {
            GaussianRational v = c.conj() * GaussianRational(word_norm_sq(words[row]) / word_norm_sq(words[j]));
            if (!v.is_zero()) out.cols[row][j] = v;
        }
    return out;
}

struct Sl2Report {
    int n = 0;
    bool bracket_B_L = false;      // [B, L] = -2L
    bool bracket_B_Lstar = false;  // [B, L*] = 2L*
    bool bracket_Lstar_L = false;  // [L*, L] = B
    bool weight_spectrum = false;  // [L*, L] acts on degree p by (n - p)
    bool ok() const { return bracket_B_L && bracket_B_Lstar && bracket_Lstar_L && weight_spectrum; }
};

inline Sl2Report check_sl2(int n) {
    if (n < 1 || n > 8) throw RangeError("check_sl2: n out of range");
    Sl2Report rep;
    rep.n = n;
    const auto L = L_matrix(n);
    const auto Ls = Lstar_matrix(n);
    const auto B = B_matrix(n);
    rep.bracket_B_L = (commutator(B, L) == L.scaled(gr(-2)));
    rep.bracket_B_Lstar = (commutator(B, Ls) == Ls.scaled(gr(2)));
    const auto LsL = commutator(Ls, L);
    rep.bracket_Lstar_L = (LsL == B);
    // weight spectrum: [L*, L] word_j = (n - deg) word_j for every word
    rep.weight_spectrum = true;
    const auto words = all_complex_words(n);
    for (std::size_t j = 0; j < words.size(); ++j) {
        std::map<std::size_t, GaussianRational> expect;
        GaussianRational w = gr(n - words[j].degree());
        if (!w.is_zero()) expect[j] = w;
        if (LsL.cols[j] != expect) rep.weight_spectrum = false;
    }
    return rep;
}

} // namespace lefschetz
} // namespace hodgekit
