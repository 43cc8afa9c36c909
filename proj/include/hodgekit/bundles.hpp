#pragma once

// Line-bundle calculus on finite covers, specialized to P^n with its
// standard affine charts: transition cocycles, tensor/dual, canonical
// bundle, sections of [mH], metrics, canonical connection, curvature,
// Fubini-Study form, positivity and Kaehler tests.
//
// Chart alpha of P^n uses coordinates z_j = x_{sigma(j)} / x_alpha where
// sigma enumerates {0..n} \ {alpha} in increasing order. Transition
// functions g_{alpha beta} are stored in chart-alpha coordinates.
//
// The Fubini-Study form is returned scaled by 2*pi (i.e. i dol dolbar
// log ||Z||^2), which keeps every coefficient an exact rational function;
// closedness and positivity are unaffected by the positive constant.

#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "hodgekit/dolbeault.hpp"
#include "hodgekit/linalg.hpp"
#include "hodgekit/rational_function.hpp"

namespace hodgekit {
namespace bundles {

using SymbolicForm = BasicForm<ComplexWord, RationalFunction>;

// ---------------------------------------------------------------------------
// covers

struct Cover {
    int charts = 0;
    int nvars = 0;
    /// coords[{a,b}][j] = j-th coordinate of chart a written in chart-b
    /// coordinates (1-based variable index j maps to position j-1).
    std::map<std::pair<int, int>, std::vector<RationalFunction>> coords;

    const std::vector<RationalFunction>& transition_coords(int from, int to) const {
        auto it = coords.find({from, to});
        if (it == coords.end()) throw RangeError("Cover: no such chart pair");
        return it->second;
    }

    friend bool operator==(const Cover& a, const Cover& b) {
        return a.charts == b.charts && a.nvars == b.nvars && a.coords == b.coords;
    }
};

/// Standard affine cover of P^n.
inline Cover projective_cover(int n) {
    if (n < 1) throw RangeError("projective_cover: n must be >= 1");
    Cover cov;
    cov.charts = n + 1;
    cov.nvars = n;
    // position of homogeneous index t among chart beta's variables (1-based)
    auto pos_in = [n](int t, int beta) {
        int p = 0;
        for (int j = 0; j <= n; ++j) {
            if (j == beta) continue;
            ++p;
            if (j == t) return p;
        }
        throw RangeError("projective_cover: bad index");
    };
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            if (a == b) continue;
            // x_t / x_a = (x_t / x_b) / (x_a / x_b)
            auto hom_over_b = [&](int t) {
                return (t == b) ? RationalFunction::one() : RationalFunction::var_z(pos_in(t, b));
            };
            std::vector<RationalFunction> images;
            const RationalFunction denom = hom_over_b(a);
            for (int t = 0; t <= n; ++t) {
                if (t == a) continue;
                images.push_back(hom_over_b(t) / denom);
            }
            cov.coords[{a, b}] = std::move(images);
        }
    return cov;
}

/// Rewrites a rational function given in chart `from` coordinates in chart
/// `to` coordinates.
inline RationalFunction express_in(const RationalFunction& f, const Cover& cover, int from, int to) {
    if (from == to) return f;
    return substitute(f, cover.transition_coords(from, to));
}

/// Pullback of a symbolic form from chart `from` to chart `to` coordinates:
/// coefficients are substituted, dz_j picks up the holomorphic Jacobian of
/// the coordinate change, dzbar_j its conjugate.
inline SymbolicForm pullback_to_chart(const SymbolicForm& f, const Cover& cover, int from, int to) {
    if (from == to) return f;
    const auto& img = cover.transition_coords(from, to);
    const int n = f.n;
    SymbolicForm out(n);
    for (const auto& [w, c] : f.terms) {
        SymbolicForm acc(n, ComplexWord(), substitute(c, img));
        for (int slot : w.canonical_letters()) {
            const int j = slot / 2 + 1;
            SymbolicForm letter(n);
            for (int k = 1; k <= n; ++k) {
                if (slot % 2 == 0) {
                    RationalFunction dj = holo_derivative(img[std::size_t(j - 1)], k);
                    if (!dj.is_zero())
                        letter.add_term(ComplexWord(IndexSet({k}), IndexSet(), IndexSet()), dj);
                } else {
                    RationalFunction dj = conj_coeff(holo_derivative(img[std::size_t(j - 1)], k));
                    if (!dj.is_zero())
                        letter.add_term(ComplexWord(IndexSet(), IndexSet({k}), IndexSet()), dj);
                }
            }
            acc = wedge(acc, letter);
        }
        out = out + acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// line bundles

struct LineBundle {
    Cover cover;
    /// g[{a,b}] in chart-a coordinates; g_{aa} = 1 is implicit.
    std::map<std::pair<int, int>, RationalFunction> transitions;

    const RationalFunction& g(int a, int b) const {
        auto it = transitions.find({a, b});
        if (it == transitions.end()) throw RangeError("LineBundle: no such transition");
        return it->second;
    }
};

inline LineBundle tensor(const LineBundle& l1, const LineBundle& l2) {
    if (!(l1.cover == l2.cover)) throw DimensionMismatchError("tensor: bundles live on different covers");
    LineBundle out{l1.cover, {}};
    for (const auto& [key, g1] : l1.transitions) out.transitions[key] = g1 * l2.transitions.at(key);
    return out;
}

inline LineBundle dual(const LineBundle& l) {
    LineBundle out{l.cover, {}};
    for (const auto& [key, g] : l.transitions) out.transitions[key] = g.inverse();
    return out;
}

inline LineBundle trivial_bundle(const Cover& cover) {
    LineBundle out{cover, {}};
    for (int a = 0; a < cover.charts; ++a)
        for (int b = 0; b < cover.charts; ++b)
            if (a != b) out.transitions[{a, b}] = RationalFunction::one();
    return out;
}

/// g_{alpha beta} = x_beta / x_alpha.
inline LineBundle hyperplane_bundle(int n) {
    Cover cov = projective_cover(n);
    LineBundle out{cov, {}};
    auto pos_in = [n](int t, int alpha) {
        int p = 0;
        for (int j = 0; j <= n; ++j) {
            if (j == alpha) continue;
            ++p;
            if (j == t) return p;
        }
        throw RangeError("hyperplane_bundle: bad index");
    };
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            if (a != b) out.transitions[{a, b}] = RationalFunction::var_z(pos_in(b, a));
    return out;
}

/// g_{alpha beta} = x_alpha / x_beta, reciprocal of the hyperplane bundle.
inline LineBundle universal_bundle(int n) { return dual(hyperplane_bundle(n)); }

/// m-th tensor power of the hyperplane bundle (m may be negative).
inline LineBundle power_of_hyperplane(int n, int m) {
    LineBundle h = hyperplane_bundle(n);
    LineBundle out{h.cover, {}};
    for (const auto& [key, g] : h.transitions) {
        RationalFunction acc = RationalFunction::one();
        for (int k = 0; k < std::abs(m); ++k) acc = acc * g;
        out.transitions[key] = (m >= 0) ? acc : acc.inverse();
    }
    return out;
}

/// Transitions are the Jacobian determinants of the affine chart changes;
/// for n = 1 this gives g_{01} = -1/z^2.
inline LineBundle canonical_bundle(int n) {
    Cover cov = projective_cover(n);
    LineBundle out{cov, {}};
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            if (a == b) continue;
            // chart-b coordinates as functions of chart-a coordinates
            const auto& img = cov.transition_coords(b, a);
            std::vector<std::vector<RationalFunction>> jac{std::size_t(n),
                                                           std::vector<RationalFunction>(std::size_t(n))};
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    jac[std::size_t(j - 1)][std::size_t(k - 1)] = holo_derivative(img[std::size_t(j - 1)], k);
            out.transitions[{a, b}] = ring_det(jac, RationalFunction::one());
        }
    return out;
}

// ---------------------------------------------------------------------------
// cocycle verification

struct CocycleReport {
    bool identity_on_diagonal = true; // g_{aa} = 1 (implicit, always true here)
    bool antisymmetry = true;         // g_{ab} g_{ba} = 1
    bool triple_identity = true;      // g_{ab} g_{bc} g_{ca} = 1
    int triples_checked = 0;
    bool ok() const { return identity_on_diagonal && antisymmetry && triple_identity; }
};

/// Exact symbolic verification of the cocycle conditions; everything is
/// expressed in the first chart of each pair/triple before comparing.
inline CocycleReport check_cocycle(const LineBundle& l) {
    CocycleReport rep;
    const int N = l.cover.charts;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b) continue;
            RationalFunction prod = l.g(a, b) * express_in(l.g(b, a), l.cover, b, a);
            if (!(prod == RationalFunction::one())) rep.antisymmetry = false;
        }
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c) {
                if (a == b || b == c || a == c) continue;
                RationalFunction prod = l.g(a, b) * express_in(l.g(b, c), l.cover, b, a) *
                                        express_in(l.g(c, a), l.cover, c, a);
                if (!(prod == RationalFunction::one())) rep.triple_identity = false;
                ++rep.triples_checked;
            }
    return rep;
}

/// Small-height Gaussian-rational sample points, deterministic in the seed.
inline std::vector<std::vector<GaussianRational>> random_rational_points(int nvars, int count,
                                                                         unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<std::vector<GaussianRational>> pts;
    pts.reserve(std::size_t(count));
    while (pts.size() < std::size_t(count)) {
        std::vector<GaussianRational> p;
        for (int j = 0; j < nvars; ++j)
            p.push_back(GaussianRational{rat(num(rng), den(rng)), rat(num(rng), den(rng))});
        pts.push_back(std::move(p));
    }
    return pts;
}

struct SampledCocycleReport {
    int points_per_triple = 0;
    int triples_checked = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};

/// Cocycle check at >= `count` random rational sample points per ordered
/// triple; points that hit a pole of any factor are skipped and redrawn.
inline SampledCocycleReport check_cocycle_sampled(const LineBundle& l, int count, unsigned seed) {
    SampledCocycleReport rep;
    rep.points_per_triple = count;
    const int N = l.cover.charts;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c) {
                if (a == b || b == c || a == c) continue;
                RationalFunction gbc = express_in(l.g(b, c), l.cover, b, a);
                RationalFunction gca = express_in(l.g(c, a), l.cover, c, a);
                int done = 0;
                int guard = 0;
                while (done < count && guard < 100 * count) {
                    ++guard;
                    std::vector<GaussianRational> p;
                    for (int j = 0; j < l.cover.nvars; ++j)
                        p.push_back(GaussianRational{rat(num(rng), den(rng)), rat(num(rng), den(rng))});
                    try {
                        GaussianRational v = eval_at(l.g(a, b), p) * eval_at(gbc, p) * eval_at(gca, p);
                        if (!(v == gr(1))) ++rep.failures;
                        ++done;
                    } catch (const RangeError&) {
                        continue; // pole, redraw
                    }
                }
                ++rep.triples_checked;
            }
    return rep;
}

// ---------------------------------------------------------------------------
// sections of [mH]

struct Section {
    std::vector<int> exponents;              // e_0..e_n with sum m
    std::vector<RationalFunction> per_chart; // s_alpha in chart-alpha coordinates
};

/// Basis of global sections of [mH]: one section per degree-m monomial in
/// x_0..x_n, materialized per chart as s_alpha = x^e / x_alpha^m.
inline std::vector<Section> sections_of_mH(int n, int m) {
    if (m < 0) return {};
    std::vector<Section> out;
    auto pos_in = [n](int t, int alpha) {
        int p = 0;
        for (int j = 0; j <= n; ++j) {
            if (j == alpha) continue;
            ++p;
            if (j == t) return p;
        }
        throw RangeError("sections_of_mH: bad index");
    };
    std::vector<int> cur(std::size_t(n + 1), 0);
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == n) {
            cur[std::size_t(n)] = remaining;
            Section s;
            s.exponents = cur;
            for (int a = 0; a <= n; ++a) {
                RationalFunction f = RationalFunction::one();
                for (int t = 0; t <= n; ++t) {
                    if (t == a) continue;
                    for (int k = 0; k < cur[std::size_t(t)]; ++k)
                        f = f * RationalFunction::var_z(pos_in(t, a));
                }
                s.per_chart.push_back(f);
            }
            out.push_back(std::move(s));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[std::size_t(idx)] = v;
            rec(idx + 1, remaining - v);
        }
        cur[std::size_t(idx)] = 0;
    };
    rec(0, m);
    return out;
}

/// Verifies s_beta = g_{beta alpha} s_alpha symbolically for every section
/// and chart pair, with g_{beta alpha} the [mH] transition.
inline bool check_sections_compatible(int n, int m, const std::vector<Section>& sections) {
    LineBundle bundle = power_of_hyperplane(n, m);
    const Cover& cov = bundle.cover;
    for (const auto& s : sections)
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) {
                if (a == b) continue;
                RationalFunction lhs = s.per_chart[std::size_t(b)];
                RationalFunction rhs = bundle.g(b, a) * express_in(s.per_chart[std::size_t(a)], cov, a, b);
                if (!(lhs == rhs)) return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// metrics, connection, curvature

/// Per-chart positive weight of a Hermitian metric on a line bundle.
struct MetricData {
    std::vector<RationalFunction> weights; // h_alpha in chart-alpha coordinates
};

/// Fubini-Study metric on the hyperplane bundle: h_alpha = 1 / (1 + sum z c).
inline MetricData fubini_study_metric(int n) {
    MetricData h;
    for (int a = 0; a <= n; ++a) {
        RationalFunction norm = RationalFunction::one();
        for (int j = 1; j <= n; ++j)
            norm = norm + RationalFunction::var_z(j) * RationalFunction::var_c(j);
        h.weights.push_back(norm.inverse());
    }
    return h;
}

/// Compatibility h_alpha = |g_{beta alpha}|^2 h_beta at sample points.
inline bool check_metric_compatible(const LineBundle& l, const MetricData& h, int samples, unsigned seed) {
    const int N = l.cover.charts;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b) continue;
            // g_{ba} in chart-a coordinates is the reciprocal of g_{ab}
            RationalFunction gba = l.g(a, b).inverse();
            RationalFunction hb = express_in(h.weights[std::size_t(b)], l.cover, b, a);
            RationalFunction rhs = gba * conj_coeff(gba) * hb;
            const RationalFunction& lhs = h.weights[std::size_t(a)];
            int done = 0, guard = 0;
            while (done < samples && guard < 100 * samples) {
                ++guard;
                std::vector<GaussianRational> p;
                for (int j = 0; j < l.cover.nvars; ++j)
                    p.push_back(GaussianRational{rat(num(rng), den(rng)), rat(num(rng), den(rng))});
                try {
                    if (!(eval_at(lhs, p) == eval_at(rhs, p))) return false;
                    ++done;
                } catch (const RangeError&) {
                    continue;
                }
            }
        }
    return true;
}

/// theta = dol(h)/h as a (1,0)-form.
inline SymbolicForm canonical_connection(const RationalFunction& h, int n) {
    SymbolicForm theta(n);
    for (int j = 1; j <= n; ++j) {
        RationalFunction c = holo_derivative(h, j) / h;
        if (!c.is_zero()) theta.add_term(ComplexWord(IndexSet({j}), IndexSet(), IndexSet()), c);
    }
    return theta;
}

/// Theta = dolbar dol log h, computed as dolbar(dol h / h) so the logarithm
/// never materializes.
inline SymbolicForm curvature(const RationalFunction& h, int n) {
    return dolbeault::dolbar(canonical_connection(h, n));
}

/// Chart-independence of the curvature: Theta_alpha pulled back to chart
/// beta equals Theta_beta, for every ordered pair, symbolically.
inline bool check_curvature_global(const LineBundle& l, const MetricData& h) {
    const int n = l.cover.nvars;
    std::vector<SymbolicForm> theta;
    for (int a = 0; a < l.cover.charts; ++a) theta.push_back(curvature(h.weights[std::size_t(a)], n));
    for (int a = 0; a < l.cover.charts; ++a)
        for (int b = 0; b < l.cover.charts; ++b) {
            if (a == b) continue;
            SymbolicForm pulled = pullback_to_chart(theta[std::size_t(a)], l.cover, a, b);
            if (!(pulled == theta[std::size_t(b)])) return false;
        }
    return true;
}

struct AdditivityReport {
    bool additive = false; // Theta(h1 h2) = Theta(h1) + Theta(h2)
    bool ok() const { return additive; }
};

inline AdditivityReport curvature_additivity_check(const RationalFunction& h1, const RationalFunction& h2,
                                                   int n) {
    AdditivityReport rep;
    rep.additive = (curvature(h1 * h2, n) == curvature(h1, n) + curvature(h2, n));
    return rep;
}

// ---------------------------------------------------------------------------
// Fubini-Study form, positivity, Kaehler criterion

/// 2*pi times the Fubini-Study form in the given chart: i dol dolbar
/// log ||Z||^2 with the affine lift Z = (z_1 .. 1 .. z_n).
inline SymbolicForm fubini_study_form_2pi(int n, int /*chart*/ = 0) {
    RationalFunction norm = RationalFunction::one();
    for (int j = 1; j <= n; ++j)
        norm = norm + RationalFunction::var_z(j) * RationalFunction::var_c(j);
    // dolbar log ||Z||^2 = sum_k (d/dc_k ||Z||^2) / ||Z||^2 dzbar_k
    SymbolicForm dolbar_log(n);
    for (int k = 1; k <= n; ++k) {
        RationalFunction c = antiholo_derivative(norm, k) / norm;
        if (!c.is_zero()) dolbar_log.add_term(ComplexWord(IndexSet(), IndexSet({k}), IndexSet()), c);
    }
    return dolbeault::dol(dolbar_log).scaled(gr(0, 1));
}

/// Same construction with the lift scaled by a holomorphic factor f
/// (used to verify lift invariance away from the zero locus of f).
inline SymbolicForm fubini_study_form_2pi_lifted(int n, const RationalFunction& f) {
    RationalFunction norm = RationalFunction::one();
    for (int j = 1; j <= n; ++j)
        norm = norm + RationalFunction::var_z(j) * RationalFunction::var_c(j);
    norm = norm * f * conj_coeff(f);
    SymbolicForm dolbar_log(n);
    for (int k = 1; k <= n; ++k) {
        RationalFunction c = antiholo_derivative(norm, k) / norm;
        if (!c.is_zero()) dolbar_log.add_term(ComplexWord(IndexSet(), IndexSet({k}), IndexSet()), c);
    }
    return dolbeault::dol(dolbar_log).scaled(gr(0, 1));
}

/// Coefficient matrix h with omega = i sum h_{mu nu} dz_mu ^ dzbar_nu.
inline std::vector<std::vector<RationalFunction>> i_factored_matrix(const SymbolicForm& omega) {
    const int n = omega.n;
    for (const auto& [w, c] : omega.terms)
        if (!(w.bidegree_p() == 1 && w.bidegree_q() == 1))
            throw ShapeError("i_factored_matrix: form is not of bidegree (1,1)");
    std::vector<std::vector<RationalFunction>> h{std::size_t(n),
                                                 std::vector<RationalFunction>(std::size_t(n))};
    const GaussianRational minus_i = gr(0, -1);
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu) {
            ComplexWord w = (mu == nu) ? ComplexWord(IndexSet(), IndexSet(), IndexSet({mu}))
                                       : ComplexWord(IndexSet({mu}), IndexSet({nu}), IndexSet());
            RationalFunction c = omega.coeff(w);
            h[std::size_t(mu - 1)][std::size_t(nu - 1)] = scale(c, minus_i);
        }
    return h;
}

/// Positive-definiteness of the i-factored coefficient matrix at each
/// sample point, decided exactly via leading principal minors.
inline bool is_positive(const SymbolicForm& omega, const std::vector<std::vector<GaussianRational>>& samples) {
    auto h = i_factored_matrix(omega);
    const std::size_t n = h.size();
    for (const auto& pt : samples) {
        GrMat m(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) m(a, b) = eval_at(h[a][b], pt);
        // Hermitian check, then Sylvester's criterion
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (!(m(a, b) == m(b, a).conj())) return false;
        for (std::size_t k = 1; k <= n; ++k) {
            GrMat lead(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) lead(a, b) = m(a, b);
            GaussianRational dk = det(lead);
            if (!dk.is_real() || !(dk.re > Rational(0))) return false;
        }
    }
    return true;
}

struct KaehlerCheckReport {
    bool symmetry_criterion = false; // d h_{mu nu} / d z_lambda symmetric in mu, lambda
    bool fundamental_form_closed = false;
    bool vacuous = false; // complex dimension 1: both hold for degree reasons
    bool ok() const { return symmetry_criterion && fundamental_form_closed; }
};

/// Checks the metric-coefficient symmetry criterion and d(Omega) = 0 for
/// Omega = (i/2) sum h_{mu nu} dz_mu ^ dzbar_nu, both symbolically.
inline KaehlerCheckReport kaehler_check(const std::vector<std::vector<RationalFunction>>& h) {
    KaehlerCheckReport rep;
    const int n = int(h.size());
    rep.vacuous = (n == 1);
    rep.symmetry_criterion = true;
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu)
            for (int lam = 1; lam <= n; ++lam) {
                RationalFunction lhs = holo_derivative(h[std::size_t(mu - 1)][std::size_t(nu - 1)], lam);
                RationalFunction rhs = holo_derivative(h[std::size_t(lam - 1)][std::size_t(nu - 1)], mu);
                if (!(lhs == rhs)) rep.symmetry_criterion = false;
            }
    SymbolicForm omega(n);
    const GaussianRational half_i{rat(0), rat(1, 2)};
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu) {
            ComplexWord w = (mu == nu) ? ComplexWord(IndexSet(), IndexSet(), IndexSet({mu}))
                                       : ComplexWord(IndexSet({mu}), IndexSet({nu}), IndexSet());
            omega.add_term(w, scale(h[std::size_t(mu - 1)][std::size_t(nu - 1)], half_i));
        }
    rep.fundamental_form_closed = dolbeault::d(omega).is_zero();
    return rep;
}

} // namespace bundles
} // namespace hodgekit
