#pragma once

// Chern forms from curvature matrices via determinant expansion over the
// wedge product, Newton's identities linking trace powers to characteristic
// coefficients, frame invariance, and the Bianchi identity.
//
// Entries of a curvature matrix are even-degree forms, which commute under
// wedge, so the determinant is well-defined by any expansion order. Chern
// forms are returned in 2*pi-units: forms[k] is (2 pi)^k times the k-th
// Chern form, i.e. the degree-2k graded piece of det(I + i Theta).

#include <cmath>
#include <functional>
#include <vector>

#include "hodgekit/coefficients.hpp"
#include "hodgekit/dolbeault.hpp"
#include "hodgekit/exterior.hpp"
#include "hodgekit/linalg.hpp"
#include "hodgekit/rational_function.hpp"

namespace hodgekit {
namespace chern {

template <class F>
using FormMat = std::vector<std::vector<F>>;

template <class F>
FormMat<F> mat_wedge(const FormMat<F>& a, const FormMat<F>& b) {
    const std::size_t r = a.size();
    FormMat<F> out(r, std::vector<F>(r, a[0][0] - a[0][0]));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) out[i][j] = out[i][j] + wedge(a[i][k], b[k][j]);
    return out;
}

template <class F>
FormMat<F> mat_sub(const FormMat<F>& a, const FormMat<F>& b) {
    FormMat<F> out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[i][j] - b[i][j];
    return out;
}

template <class F>
F mat_trace(const FormMat<F>& a) {
    F t = a[0][0];
    for (std::size_t i = 1; i < a.size(); ++i) t = t + a[i][i];
    return t;
}

template <class F>
bool mat_is_zero(const FormMat<F>& a) {
    for (const auto& row : a)
        for (const auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

/// Sum of all k x k principal minors, each expanded with wedge as product.
template <class F>
F principal_minor_sum(const FormMat<F>& theta, int k, const F& one_form) {
    const int r = int(theta.size());
    F acc = one_form - one_form;
    std::vector<int> idx;
    idx.resize(std::size_t(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            FormMat<F> minor(std::size_t(k), std::vector<F>(std::size_t(k), one_form));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    minor[std::size_t(a)][std::size_t(b)] =
                        theta[std::size_t(idx[std::size_t(a)])][std::size_t(idx[std::size_t(b)])];
            acc = acc + ring_det(minor, one_form);
            return;
        }
        for (int v = start; v <= r - (k - depth); ++v) {
            idx[std::size_t(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    if (k == 0) return one_form;
    rec(0, 0);
    return acc;
}

/// Graded pieces of det(I + i Theta): forms[k] = i^k * (sum of k x k
/// principal wedge-minors), which is (2 pi)^k times the k-th Chern form.
template <class F>
std::vector<F> chern_forms(const FormMat<F>& theta, const F& one_form) {
    const std::size_t r = theta.size();
    for (const auto& row : theta)
        if (row.size() != r) throw ShapeError("chern_forms: curvature matrix is not square");
    std::vector<F> out;
    for (std::size_t k = 0; k <= r; ++k)
        out.push_back(principal_minor_sum(theta, int(k), one_form).scaled(i_power(long(k))));
    return out;
}

// ---------------------------------------------------------------------------
// Newton's identities: k c_k + b_1 c_{k-1} + ... + b_{k-1} c_1 + b_k = 0
// with c_0 = 1, in any commutative Q-algebra.

template <class R>
R rational_multiple(const R& x, const Rational& q);
template <>
inline Rational rational_multiple<Rational>(const Rational& x, const Rational& q) {
    return x * q;
}
template <>
inline GaussianRational rational_multiple<GaussianRational>(const GaussianRational& x, const Rational& q) {
    return x * GaussianRational(q);
}
template <class Word, class Coeff>
BasicForm<Word, Coeff> rational_multiple(const BasicForm<Word, Coeff>& x, const Rational& q) {
    return x.scaled(GaussianRational(q));
}

/// b_k = tr(A^k) -> characteristic coefficients c_1..c_k.
template <class R>
std::vector<R> newton_c_from_b(const std::vector<R>& b) {
    std::vector<R> c;
    for (std::size_t k = 1; k <= b.size(); ++k) {
        // c_k = -(1/k) (b_k + sum_{j=1}^{k-1} b_j c_{k-j})
        R acc = b[k - 1];
        for (std::size_t j = 1; j < k; ++j) acc = acc + b[j - 1] * c[k - j - 1];
        c.push_back(rational_multiple(acc, Rational(-1, BigInt(k))));
    }
    return c;
}

/// Characteristic coefficients c_1..c_k -> power traces b_1..b_k.
template <class R>
std::vector<R> newton_b_from_c(const std::vector<R>& c) {
    std::vector<R> b;
    for (std::size_t k = 1; k <= c.size(); ++k) {
        // b_k = -(k c_k + sum_{j=1}^{k-1} b_j c_{k-j})
        R acc = rational_multiple(c[k - 1], Rational(BigInt(k), 1));
        for (std::size_t j = 1; j < k; ++j) acc = acc + b[j - 1] * c[k - j - 1];
        b.push_back(rational_multiple(acc, Rational(-1)));
    }
    return b;
}

// ---------------------------------------------------------------------------
// frame invariance: chern_forms(A^{-1} Theta A) = chern_forms(Theta)

/// Conjugates a matrix of forms by an invertible matrix of 0-form scalars
/// drawn from the same coefficient field, then compares total Chern forms.
template <class Word, class Coeff>
bool frame_invariance_check(const FormMat<BasicForm<Word, Coeff>>& theta, const Mat<Coeff>& frame_change,
                            const BasicForm<Word, Coeff>& one_form) {
    const std::size_t r = theta.size();
    if (frame_change.rows != r || frame_change.cols != r)
        throw ShapeError("frame_invariance_check: frame change has wrong shape");
    Mat<Coeff> ainv = inverse(frame_change); // throws on singular input
    FormMat<BasicForm<Word, Coeff>> conj(r, std::vector<BasicForm<Word, Coeff>>(r, one_form - one_form));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b)
                    conj[i][j] =
                        conj[i][j] + theta[a][b].coeff_scaled(ainv(i, a) * frame_change(b, j));
    auto lhs = chern_forms(conj, one_form);
    auto rhs = chern_forms(theta, one_form);
    for (std::size_t k = 0; k < lhs.size(); ++k)
        if (!(lhs[k] == rhs[k])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Bianchi identity d Theta = [Theta, theta] for Theta = d theta + theta^2

using PolyForm = dolbeault::PolyForm;

template <class F>
FormMat<F> mat_d(const FormMat<F>& a) {
    FormMat<F> out = a;
    for (auto& row : out)
        for (auto& f : row) f = dolbeault::d(f);
    return out;
}

struct BianchiReport {
    bool holds = false;
    std::size_t residual_terms = 0;
    bool ok() const { return holds; }
};

/// theta: matrix of 1-forms with polynomial coefficients over one chart.
inline BianchiReport bianchi_check(const FormMat<PolyForm>& theta) {
    BianchiReport rep;
    FormMat<PolyForm> big_theta = mat_d(theta);
    FormMat<PolyForm> theta2 = mat_wedge(theta, theta);
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = 0; j < theta.size(); ++j)
            big_theta[i][j] = big_theta[i][j] + theta2[i][j];
    FormMat<PolyForm> lhs = mat_d(big_theta);
    FormMat<PolyForm> rhs = mat_sub(mat_wedge(big_theta, theta), mat_wedge(theta, big_theta));
    FormMat<PolyForm> residual = mat_sub(lhs, rhs);
    rep.holds = mat_is_zero(residual);
    for (const auto& row : residual)
        for (const auto& f : row) rep.residual_terms += f.terms.size();
    return rep;
}

/// d tr(Theta^k) = 0 for Theta = d theta + theta^2, k <= kmax.
inline bool trace_powers_closed(const FormMat<PolyForm>& theta, int kmax) {
    FormMat<PolyForm> big_theta = mat_d(theta);
    FormMat<PolyForm> theta2 = mat_wedge(theta, theta);
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = 0; j < theta.size(); ++j)
            big_theta[i][j] = big_theta[i][j] + theta2[i][j];
    FormMat<PolyForm> power = big_theta;
    for (int k = 1; k <= kmax; ++k) {
        if (!dolbeault::d(mat_trace(power)).is_zero()) return false;
        if (k < kmax) power = mat_wedge(power, big_theta);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Chern number of a line bundle over P^1 by quadrature on the chart
//
// For Theta = f dz ^ dzbar the number is (i / 2 pi) Int Theta =
// (1 / pi) Int_R2 Re f(x + i y) dx dy; the plane is compactified with
// x = tan s, y = tan t and the transformed integrand handled by nested
// adaptive Simpson quadrature.

namespace detail {

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                               double fm, double fb, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, eps / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return adaptive_simpson(f, a, b, fa, fm, fb, eps, 24);
}

} // namespace detail

/// theta_coeff is f with Theta = f dz ^ dzbar on the affine chart.
inline double chern_number_p1_chart(const RationalFunction& theta_coeff, double eps = 1e-9) {
    const double half_pi = std::acos(0.0);
    auto integrand = [&](double s, double t) {
        const double x = std::tan(s), y = std::tan(t);
        const double jac = (1.0 + x * x) * (1.0 + y * y); // sec^2 s sec^2 t
        std::complex<double> f = eval_complex(theta_coeff, {std::complex<double>(x, y)});
        return f.real() * jac;
    };
    auto outer = [&](double s) {
        return detail::integrate([&](double t) { return integrand(s, t); }, -half_pi + 1e-12,
                                 half_pi - 1e-12, eps);
    };
    const double total = detail::integrate(outer, -half_pi + 1e-12, half_pi - 1e-12, eps);
    return total / (2.0 * half_pi); // divide by pi
}

} // namespace chern
} // namespace hodgekit
