#pragma once

// Rational functions in chart variables z1..zn and their formal conjugates
// c1..cn, with Gaussian-rational coefficients. Conjugate variables are
// independent symbols; conjugation is the involution swapping z <-> c and
// conjugating scalars. Equality is tested by cross-multiplication, so no
// full multivariate gcd is needed.

#include <complex>
#include <cctype>
#include <string>
#include <vector>

#include "hodgekit/coefficients.hpp"

namespace hodgekit {

struct RationalFunction {
    PolyCoefficient num;
    PolyCoefficient den;

    RationalFunction() : den(gr(1)) {}
    RationalFunction(PolyCoefficient n, PolyCoefficient d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw ValidationError("RationalFunction: zero denominator");
        normalize();
    }
    explicit RationalFunction(const GaussianRational& c) : num(c), den(gr(1)) {}
    explicit RationalFunction(const PolyCoefficient& p) : num(p), den(gr(1)) {}

    static RationalFunction var_z(int j) { return RationalFunction(PolyCoefficient::var_z(j)); }
    static RationalFunction var_c(int j) { return RationalFunction(PolyCoefficient::var_c(j)); }
    static RationalFunction constant(const GaussianRational& c) { return RationalFunction(c); }
    static RationalFunction one() { return RationalFunction(gr(1)); }

    bool is_zero() const { return num.is_zero(); }

    void normalize() {
        if (num.is_zero()) {
            den = PolyCoefficient(gr(1));
            return;
        }
        // cancel a common monomial factor
        auto min_exps = [](const PolyCoefficient& p) {
            PolyMonomial m = p.terms.begin()->first;
            for (const auto& [mm, c] : p.terms) {
                for (std::size_t j = 0; j < m.ze.size(); ++j)
                    m.ze[j] = std::min(m.ze[j], component(mm.ze, j));
                for (std::size_t j = 0; j < m.ce.size(); ++j)
                    m.ce[j] = std::min(m.ce[j], component(mm.ce, j));
                while (m.ze.size() > mm.ze.size()) m.ze.pop_back();
                while (m.ce.size() > mm.ce.size()) m.ce.pop_back();
            }
            trim_trailing_zeros(m.ze);
            trim_trailing_zeros(m.ce);
            return m;
        };
        PolyMonomial gn = min_exps(num), gd = min_exps(den);
        PolyMonomial g;
        g.ze.resize(std::min(gn.ze.size(), gd.ze.size()));
        g.ce.resize(std::min(gn.ce.size(), gd.ce.size()));
        for (std::size_t j = 0; j < g.ze.size(); ++j) g.ze[j] = std::min(gn.ze[j], gd.ze[j]);
        for (std::size_t j = 0; j < g.ce.size(); ++j) g.ce[j] = std::min(gn.ce[j], gd.ce[j]);
        trim_trailing_zeros(g.ze);
        trim_trailing_zeros(g.ce);
        if (!(g == PolyMonomial{})) {
            auto divmono = [&](const PolyCoefficient& p) {
                PolyCoefficient out;
                for (const auto& [m, c] : p.terms) {
                    std::vector<int> ze(std::max(m.ze.size(), g.ze.size()), 0), ce(std::max(m.ce.size(), g.ce.size()), 0);
                    for (std::size_t j = 0; j < ze.size(); ++j) ze[j] = component(m.ze, j) - component(g.ze, j);
                    for (std::size_t j = 0; j < ce.size(); ++j) ce[j] = component(m.ce, j) - component(g.ce, j);
                    out.add_term(PolyMonomial{std::move(ze), std::move(ce)}, c);
                }
                return out;
            };
            num = divmono(num);
            den = divmono(den);
        }
        // scale so the leading denominator coefficient is 1
        const GaussianRational lead = den.terms.begin()->second;
        if (!(lead == gr(1))) {
            num = scale(num, GaussianRational(1) / lead);
            den = scale(den, GaussianRational(1) / lead);
        }
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den == b.den) return RationalFunction(a.num + b.num, a.den);
        return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den == b.den) return RationalFunction(a.num - b.num, a.den);
        return RationalFunction(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction out = a;
        out.num = -out.num;
        return out;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.num, a.den * b.den);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw RangeError("RationalFunction: division by zero");
        return RationalFunction(a.num * b.den, a.den * b.num);
    }
    RationalFunction inverse() const {
        if (is_zero()) throw RangeError("RationalFunction: inverse of zero");
        return RationalFunction(den, num);
    }

    /// Equality as rational functions: num_a * den_b == num_b * den_a.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num * b.den == b.num * a.den;
    }
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline RationalFunction scale(const RationalFunction& f, const GaussianRational& s) {
    RationalFunction out = f;
    out.num = scale(out.num, s);
    if (s.is_zero()) out.den = PolyCoefficient(gr(1));
    return out;
}
inline RationalFunction conj_coeff(const RationalFunction& f) {
    return RationalFunction(conj_coeff(f.num), conj_coeff(f.den));
}
template <>
inline RationalFunction scale_unit<RationalFunction>() {
    return RationalFunction::one();
}

/// Quotient rule, derivative in z_j.
inline RationalFunction holo_derivative(const RationalFunction& f, int j) {
    return RationalFunction(d_dz(f.num, j) * f.den - f.num * d_dz(f.den, j), f.den * f.den);
}
/// Quotient rule, derivative in c_j (formal conjugate variable).
inline RationalFunction antiholo_derivative(const RationalFunction& f, int j) {
    return RationalFunction(d_dc(f.num, j) * f.den - f.num * d_dc(f.den, j), f.den * f.den);
}

// ---------------------------------------------------------------------------
// substitution and evaluation

/// Evaluate a polynomial with each z_j replaced by zimg[j-1] and each c_j by
/// cimg[j-1] (all rational functions).
inline RationalFunction compose(const PolyCoefficient& p, const std::vector<RationalFunction>& zimg,
                                const std::vector<RationalFunction>& cimg) {
    RationalFunction acc = RationalFunction::constant(gr(0));
    for (const auto& [m, c] : p.terms) {
        RationalFunction t = RationalFunction::constant(c);
        for (std::size_t j = 0; j < m.ze.size(); ++j)
            for (int e = 0; e < m.ze[j]; ++e) t = t * zimg.at(j);
        for (std::size_t j = 0; j < m.ce.size(); ++j)
            for (int e = 0; e < m.ce[j]; ++e) t = t * cimg.at(j);
        acc = acc + t;
    }
    return acc;
}

/// Substitute chart coordinates: z_j -> zimg[j-1], c_j -> conj(zimg[j-1]).
inline RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& zimg) {
    std::vector<RationalFunction> cimg;
    cimg.reserve(zimg.size());
    for (const auto& g : zimg) cimg.push_back(conj_coeff(g));
    RationalFunction n = compose(f.num, zimg, cimg);
    RationalFunction dd = compose(f.den, zimg, cimg);
    return n / dd;
}

/// Exact evaluation at a Gaussian-rational point, c_j = conj(z_j).
inline GaussianRational eval_at(const RationalFunction& f, const std::vector<GaussianRational>& z) {
    std::vector<GaussianRational> c;
    c.reserve(z.size());
    for (const auto& v : z) c.push_back(v.conj());
    GaussianRational dv = eval(f.den, z, c);
    if (dv.is_zero()) throw RangeError("RationalFunction: evaluation hits a pole");
    return eval(f.num, z, c) / dv;
}

inline std::complex<double> to_cd(const GaussianRational& g) {
    return {boost::rational_cast<double>(g.re), boost::rational_cast<double>(g.im)};
}

/// Floating-point evaluation (used only for quadrature), c_j = conj(z_j).
inline std::complex<double> eval_complex(const RationalFunction& f, const std::vector<std::complex<double>>& z) {
    auto eval_poly = [&](const PolyCoefficient& p) {
        std::complex<double> acc = 0.0;
        for (const auto& [m, c] : p.terms) {
            std::complex<double> t = to_cd(c);
            for (std::size_t j = 0; j < m.ze.size(); ++j)
                for (int e = 0; e < m.ze[j]; ++e) t *= z.at(j);
            for (std::size_t j = 0; j < m.ce.size(); ++j)
                for (int e = 0; e < m.ce[j]; ++e) t *= std::conj(z.at(j));
            acc += t;
        }
        return acc;
    };
    return eval_poly(f.num) / eval_poly(f.den);
}

// ---------------------------------------------------------------------------
// printing and parsing: variables z1..zn, c1..cn, integer literals, + - * / ^

inline std::string to_string(const PolyCoefficient& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        std::string term;
        // coefficient
        auto coeff_str = [&](const GaussianRational& g) -> std::string {
            std::string s;
            if (g.is_real()) {
                s = g.re.numerator().str();
                if (g.re.denominator() != 1) s += "/" + g.re.denominator().str();
            } else {
                s = "(" + to_fraction_string(g.re) + "+" + to_fraction_string(g.im) + "*i)";
            }
            return s;
        };
        term = coeff_str(c);
        for (std::size_t j = 0; j < m.ze.size(); ++j)
            if (m.ze[j] > 0) {
                term += "*z" + std::to_string(j + 1);
                if (m.ze[j] > 1) term += "^" + std::to_string(m.ze[j]);
            }
        for (std::size_t j = 0; j < m.ce.size(); ++j)
            if (m.ce[j] > 0) {
                term += "*c" + std::to_string(j + 1);
                if (m.ce[j] > 1) term += "^" + std::to_string(m.ce[j]);
            }
        if (!first && term[0] != '-') out += "+";
        out += term;
        first = false;
    }
    return out;
}

inline std::string to_string(const RationalFunction& f) {
    std::string n = "(" + to_string(f.num) + ")";
    if (f.den == PolyCoefficient(gr(1))) return n;
    return n + "/(" + to_string(f.den) + ")";
}

namespace detail {

struct RfParser {
    const std::string& src;
    std::size_t pos = 0;

    explicit RfParser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    RationalFunction parse_expr() {
        RationalFunction acc = parse_term();
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }
    RationalFunction parse_term() {
        RationalFunction acc = parse_factor();
        while (true) {
            if (eat('*'))
                acc = acc * parse_factor();
            else if (eat('/'))
                acc = acc / parse_factor();
            else
                return acc;
        }
    }
    RationalFunction parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        RationalFunction base = parse_base();
        if (eat('^')) {
            bool negexp = eat('-');
            long long e = parse_integer();
            RationalFunction acc = RationalFunction::one();
            for (long long k = 0; k < e; ++k) acc = acc * base;
            return negexp ? acc.inverse() : acc;
        }
        return base;
    }
    RationalFunction parse_base() {
        skip_ws();
        if (eat('(')) {
            RationalFunction inner = parse_expr();
            if (!eat(')')) throw ValidationError("rational-function parse: missing ')'");
            return inner;
        }
        const char c = peek();
        if (c == 'z' || c == 'c' || c == 'i') {
            ++pos;
            if (c == 'i') return RationalFunction::constant(gr(0, 1));
            long long idx = parse_integer();
            if (idx < 1) throw ValidationError("rational-function parse: variable index must be >= 1");
            return (c == 'z') ? RationalFunction::var_z(int(idx)) : RationalFunction::var_c(int(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RationalFunction::constant(GaussianRational(Rational(BigInt(parse_digits()), 1)));
        throw ValidationError(std::string("rational-function parse: unexpected character '") + c + "'");
    }
    long long parse_integer() { return std::stoll(parse_digits()); }
    std::string parse_digits() {
        skip_ws();
        std::string out;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) out += src[pos++];
        if (out.empty()) throw ValidationError("rational-function parse: expected an integer");
        return out;
    }
};

} // namespace detail

inline RationalFunction parse_rational_function(const std::string& s) {
    detail::RfParser p(s);
    RationalFunction out = p.parse_expr();
    p.skip_ws();
    if (p.pos != s.size()) throw ValidationError("rational-function parse: trailing input in '" + s + "'");
    return out;
}

} // namespace hodgekit
