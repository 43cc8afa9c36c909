#pragma once

// JSON (de)serialization for forms, reports, nerves, sheaves, simplicial
// complexes, differential operators, and line bundles. Exact fractions are
// rendered as decimal-integer strings "num/den". nlohmann::ordered_json
// preserves insertion order, so identical inputs serialize byte-identically.

#include <cstdio>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "hodgekit/bundles.hpp"
#include "hodgekit/cech.hpp"
#include "hodgekit/coefficients.hpp"
#include "hodgekit/discrete_hodge.hpp"
#include "hodgekit/dolbeault.hpp"
#include "hodgekit/elliptic.hpp"
#include "hodgekit/exterior.hpp"
#include "hodgekit/hodge_star.hpp"
#include "hodgekit/lefschetz.hpp"

namespace hodgekit {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// scalars

inline Json rational_json(const Rational& r) { return to_fraction_string(r); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return rat(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ValidationError("expected a rational as \"num/den\" string or integer");
}

inline GaussianRational gaussian_from_json(const Json& j) {
    GaussianRational g;
    if (j.contains("re")) g.re = rational_from_json(j.at("re"));
    if (j.contains("im")) g.im = rational_from_json(j.at("im"));
    return g;
}

// ---------------------------------------------------------------------------
// words and constant-coefficient forms

inline Json word_json(const RealWord& w) {
    Json out = Json::array();
    for (int slot : w.letters()) {
        const int mu = slot / 2 + 1;
        out.push_back((slot % 2 == 0 ? "x" : "y") + std::to_string(mu));
    }
    return out;
}

inline Json word_json(const ComplexWord& w) {
    Json out;
    out["A"] = w.A.elements();
    out["B"] = w.B.elements();
    out["M"] = w.M.elements();
    return out;
}

inline RealWord real_word_from_json(const Json& j) {
    RealWord w;
    for (const auto& entry : j) {
        const std::string s = entry.get<std::string>();
        if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y'))
            throw ValidationError("bad real letter '" + s + "'");
        const int mu = std::stoi(s.substr(1));
        const std::uint64_t bit = (s[0] == 'x') ? RealWord::x_bit(mu) : RealWord::y_bit(mu);
        if (w.mask & bit) throw ValidationError("repeated letter '" + s + "'");
        w.mask |= bit;
    }
    return w;
}

inline ComplexWord complex_word_from_json(const Json& j) {
    auto set_from = [](const Json& arr) {
        IndexSet s;
        for (const auto& v : arr) s.mask |= (1u << (v.get<int>() - 1));
        return s;
    };
    return ComplexWord(set_from(j.value("A", Json::array())), set_from(j.value("B", Json::array())),
                       set_from(j.value("M", Json::array())));
}

template <class Word>
Json form_json(const BasicForm<Word, GaussianRational>& f, const char* repr) {
    Json out;
    out["n"] = f.n;
    out["repr"] = repr;
    Json terms = Json::array();
    for (const auto& [w, c] : f.terms) {
        Json t;
        t["word"] = word_json(w);
        t["re"] = rational_json(c.re);
        t["im"] = rational_json(c.im);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

inline Json form_json(const Form& f) { return form_json(f, "real"); }
inline Json form_json(const ComplexForm& f) { return form_json(f, "complex"); }

inline Form real_form_from_json(const Json& j) {
    Form f(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) f.add_term(real_word_from_json(t.at("word")), gaussian_from_json(t));
    return f;
}

inline ComplexForm complex_form_from_json(const Json& j) {
    ComplexForm f(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        f.add_term(complex_word_from_json(t.at("word")), gaussian_from_json(t));
    return f;
}

// ---------------------------------------------------------------------------
// Fourier data

inline Json fourier_json(const FourierCoefficient& f, int nvars) {
    Json out = Json::array();
    for (const auto& [k, c] : f.modes) {
        Json entry;
        std::vector<int> kk = k;
        kk.resize(std::size_t(nvars), 0);
        entry["freq"] = kk;
        entry["re"] = rational_json(c.re);
        entry["im"] = rational_json(c.im);
        out.push_back(std::move(entry));
    }
    return out;
}

inline FourierCoefficient fourier_from_json(const Json& j) {
    FourierCoefficient f;
    for (const auto& entry : j)
        f.add_mode(entry.at("freq").get<std::vector<int>>(), gaussian_from_json(entry));
    return f;
}

// ---------------------------------------------------------------------------
// coefficient forms (polynomial or Fourier coefficients)

inline Json poly_json(const PolyCoefficient& p, int nvars) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms) {
        Json entry;
        std::vector<int> ze = m.ze, ce = m.ce;
        if (ze.size() < std::size_t(nvars)) ze.resize(std::size_t(nvars), 0);
        if (ce.size() < std::size_t(nvars)) ce.resize(std::size_t(nvars), 0);
        entry["exp"] = Json::array({ze, ce});
        entry["re"] = rational_json(c.re);
        entry["im"] = rational_json(c.im);
        out.push_back(std::move(entry));
    }
    return out;
}

inline PolyCoefficient poly_from_json(const Json& j) {
    PolyCoefficient p;
    for (const auto& entry : j) {
        const auto& e = entry.at("exp");
        p.add_term(PolyMonomial{e.at(0).get<std::vector<int>>(), e.at(1).get<std::vector<int>>()},
                   gaussian_from_json(entry));
    }
    return p;
}

namespace detail {
inline const char* coeff_kind(const PolyCoefficient*) { return "poly"; }
inline const char* coeff_kind(const FourierCoefficient*) { return "fourier"; }
inline const char* repr_name(const RealWord*) { return "real"; }
inline const char* repr_name(const ComplexWord*) { return "complex"; }
inline Json coeff_json(const PolyCoefficient& c, int nvars) { return poly_json(c, nvars); }
inline Json coeff_json(const FourierCoefficient& c, int nvars) { return fourier_json(c, 2 * nvars); }
} // namespace detail

template <class Word, class Coeff>
Json coefficient_form_json(const BasicForm<Word, Coeff>& f) {
    Json out;
    out["n"] = f.n;
    out["repr"] = detail::repr_name(static_cast<const Word*>(nullptr));
    out["coeff_kind"] = detail::coeff_kind(static_cast<const Coeff*>(nullptr));
    Json terms = Json::array();
    for (const auto& [w, c] : f.terms) {
        Json t;
        t["word"] = word_json(w);
        t["coeff"] = detail::coeff_json(c, f.n);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

template <class Word, class Coeff>
BasicForm<Word, Coeff> coefficient_form_from_json(const Json& j) {
    const char* want_repr = detail::repr_name(static_cast<const Word*>(nullptr));
    const char* want_kind = detail::coeff_kind(static_cast<const Coeff*>(nullptr));
    if (j.at("repr").get<std::string>() != want_repr)
        throw ValidationError(std::string("coefficient form: expected repr '") + want_repr + "'");
    if (j.at("coeff_kind").get<std::string>() != want_kind)
        throw ValidationError(std::string("coefficient form: expected coeff_kind '") + want_kind + "'");
    BasicForm<Word, Coeff> f(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        Word w;
        if constexpr (std::is_same_v<Word, RealWord>)
            w = real_word_from_json(t.at("word"));
        else
            w = complex_word_from_json(t.at("word"));
        if constexpr (std::is_same_v<Coeff, PolyCoefficient>)
            f.add_term(w, poly_from_json(t.at("coeff")));
        else
            f.add_term(w, fourier_from_json(t.at("coeff")));
    }
    return f;
}

// ---------------------------------------------------------------------------
// verification reports

inline Json star_report_json(const StarAgreementReport& rep) {
    Json out;
    out["n"] = rep.n;
    out["words_checked"] = rep.words_checked;
    Json mism = Json::array();
    for (const auto& w : rep.mismatches) mism.push_back(word_json(w));
    out["mismatches"] = std::move(mism);
    return out;
}

inline Json sl2_report_json(const lefschetz::Sl2Report& rep) {
    Json out;
    out["n"] = rep.n;
    Json rel;
    rel["BL"] = rep.bracket_B_L ? "ok" : "FAIL";
    rel["BLstar"] = rep.bracket_B_Lstar ? "ok" : "FAIL";
    rel["LstarL"] = rep.bracket_Lstar_L ? "ok" : "FAIL";
    out["relations"] = std::move(rel);
    out["weight_spectrum"] = rep.weight_spectrum ? "ok" : "FAIL";
    return out;
}

inline Json kaehler_report_json(const dolbeault::KaehlerIdentityReport& rep) {
    Json out;
    out["n"] = rep.n;
    out["maxfreq"] = rep.maxfreq;
    out["modes_checked"] = rep.modes_checked;
    Json idents;
    for (const auto& [name, violations] : rep.violations)
        idents[name] = (violations == 0) ? "ok" : ("FAIL on " + std::to_string(violations) + " modes");
    out["identities"] = std::move(idents);
    return out;
}

inline Json conversion_sign_report_json(const ConversionSignReport& rep) {
    Json out;
    out["n"] = rep.n;
    out["pairs_checked"] = rep.pairs_checked;
    out["closed_form_mismatches"] = rep.mismatches.size();
    out["corrected_form_mismatches"] = rep.corrected_mismatches.size();
    return out;
}

inline Json dstar_report_json(const dolbeault::DstarConventionReport& rep) {
    Json out;
    out["n"] = rep.n;
    out["maxfreq"] = rep.maxfreq;
    out["forms_checked"] = rep.forms_checked;
    out["local_formula_matches_adjoint"] = rep.local_matches_adjoint;
    out["global_star_formula_matches_adjoint"] = rep.star_formula_matches;
    return out;
}

// ---------------------------------------------------------------------------
// nerves and presented sheaves

inline cech::Nerve nerve_from_json(const Json& j) {
    std::vector<cech::Simplex> simplices;
    for (const auto& s : j.at("simplices")) simplices.push_back(s.get<std::vector<int>>());
    return cech::Nerve(j.at("cover_size").get<int>(), simplices);
}

/// Sheaf JSON: {"dims": [{"simplex": [...], "dim": d}, ...],
///              "restrictions": [{"face": [...], "simplex": [...],
///                                "matrix": [["num/den", ...], ...]}, ...]}
inline cech::PresentedSheaf sheaf_from_json(const cech::Nerve& nerve, const Json& j) {
    cech::PresentedSheaf sheaf;
    sheaf.nerve = nerve;
    for (const auto& e : j.at("dims"))
        sheaf.dim[e.at("simplex").get<std::vector<int>>()] = e.at("dim").get<int>();
    for (const auto& e : j.at("restrictions")) {
        const auto face = e.at("face").get<std::vector<int>>();
        const auto simplex = e.at("simplex").get<std::vector<int>>();
        const auto& rows = e.at("matrix");
        RatMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rational_from_json(rows[r][c]);
        sheaf.restriction[{face, simplex}] = std::move(m);
    }
    return sheaf;
}

// ---------------------------------------------------------------------------
// simplicial complexes

inline simplicial::SimplicialComplex complex_from_json(const Json& j) {
    std::vector<simplicial::Simplex> maximal;
    for (const auto& s : j.at("maximal")) maximal.push_back(s.get<std::vector<int>>());
    return simplicial::SimplicialComplex(j.at("vertices").get<int>(), maximal);
}

inline std::vector<std::vector<Rational>> weights_from_json(const Json& j,
                                                            const simplicial::SimplicialComplex& complex) {
    std::vector<std::vector<Rational>> weights(std::size_t(complex.dim() + 1));
    for (int k = 0; k <= complex.dim(); ++k) {
        const std::string key = std::to_string(k);
        if (j.contains(key)) {
            for (const auto& v : j.at(key)) weights[std::size_t(k)].push_back(rational_from_json(v));
        } else {
            weights[std::size_t(k)].assign(complex.count(k), rat(1));
        }
    }
    return weights;
}

// ---------------------------------------------------------------------------
// differential operators

inline elliptic::LDO ldo_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::map<std::vector<int>, GaussianRational> terms;
    for (const auto& t : j.at("terms")) {
        auto alpha = t.at("alpha").get<std::vector<int>>();
        if (int(alpha.size()) != n) throw ValidationError("LDO JSON: alpha length != n");
        terms[alpha] = terms.count(alpha) ? terms[alpha] + gaussian_from_json(t) : gaussian_from_json(t);
    }
    return elliptic::LDO(n, std::move(terms));
}

/// Scalar trigonometric polynomial: {"n": d, "modes": [{"freq": [...], "re": .., "im": ..}]}
inline FourierCoefficient trig_poly_from_json(const Json& j) { return fourier_from_json(j.at("modes")); }

// ---------------------------------------------------------------------------
// line bundles

inline Json bundle_json(const bundles::LineBundle& l) {
    Json out;
    out["charts"] = l.cover.charts;
    Json trans;
    for (const auto& [key, g] : l.transitions)
        trans["(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")"] = to_string(g);
    out["transitions"] = std::move(trans);
    return out;
}

/// Rebuilds a line bundle from its transition strings over a given cover
/// (the JSON carries transitions only, not the chart substitution maps).
inline bundles::LineBundle bundle_from_json(const Json& j, const bundles::Cover& cover) {
    if (j.at("charts").get<int>() != cover.charts)
        throw ValidationError("bundle JSON: chart count does not match the cover");
    bundles::LineBundle out{cover, {}};
    for (const auto& [key, value] : j.at("transitions").items()) {
        int a = 0, b = 0;
        if (std::sscanf(key.c_str(), "(%d,%d)", &a, &b) != 2)
            throw ValidationError("bundle JSON: bad transition key '" + key + "'");
        if (a < 0 || b < 0 || a >= cover.charts || b >= cover.charts || a == b)
            throw ValidationError("bundle JSON: chart pair out of range in '" + key + "'");
        out.transitions[{a, b}] = parse_rational_function(value.get<std::string>());
    }
    return out;
}

/// Matrix of constant-coefficient complex forms for the chern CLI:
/// {"n": int, "matrix": [[form, ...], ...]} with forms in the complex repr.
inline std::vector<std::vector<ComplexForm>> form_matrix_from_json(const Json& j) {
    std::vector<std::vector<ComplexForm>> out;
    for (const auto& row : j.at("matrix")) {
        std::vector<ComplexForm> r;
        for (const auto& cell : row) r.push_back(complex_form_from_json(cell));
        out.push_back(std::move(r));
    }
    const std::size_t rank = out.size();
    for (const auto& row : out)
        if (row.size() != rank) throw ShapeError("form matrix is not square");
    return out;
}

} // namespace hodgekit
