#pragma once

// Finite-dimensional Hodge theory on simplicial complexes: boundary
// operators, combinatorial Laplacians, exact harmonic projection and Green
// operator. Every operator identity of the Hodge theorem is asserted
// exactly at construction time.
//
// Inner products are diagonal positive weights per degree (identity when
// omitted). The Green operator is computed as (Delta + H)^{-1} (I - H),
// which agrees with the inverse of Delta on the orthogonal complement of
// the harmonic space and vanishes on it.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hodgekit/linalg.hpp"

namespace hodgekit {
namespace simplicial {

using Simplex = std::vector<int>;

struct SimplicialComplex {
    int vertices = 0;
    std::vector<std::vector<Simplex>> by_dim; // by_dim[k] = k-simplices, lexicographic

    SimplicialComplex() = default;
    SimplicialComplex(int nverts, const std::vector<Simplex>& maximal) : vertices(nverts) {
        std::set<Simplex> closed;
        for (Simplex s : maximal) {
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw ValidationError("SimplicialComplex: repeated vertex");
            for (int v : s)
                if (v < 0 || v >= nverts) throw ValidationError("SimplicialComplex: vertex out of range");
            const std::size_t m = s.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
                Simplex face;
                for (std::size_t b = 0; b < m; ++b)
                    if ((mask >> b) & 1u) face.push_back(s[b]);
                closed.insert(face);
            }
        }
        for (const Simplex& s : closed) {
            const std::size_t k = s.size() - 1;
            if (by_dim.size() <= k) by_dim.resize(k + 1);
            by_dim[k].push_back(s);
        }
        for (auto& level : by_dim) std::sort(level.begin(), level.end());
    }

    int dim() const { return int(by_dim.size()) - 1; }
    const std::vector<Simplex>& simplices(int k) const {
        static const std::vector<Simplex> empty;
        return (k >= 0 && k <= dim()) ? by_dim[std::size_t(k)] : empty;
    }
    std::size_t count(int k) const { return simplices(k).size(); }
    std::size_t index_of(const Simplex& s) const {
        const auto& level = simplices(int(s.size()) - 1);
        auto it = std::lower_bound(level.begin(), level.end(), s);
        if (it == level.end() || *it != s) throw RangeError("SimplicialComplex: unknown simplex");
        return std::size_t(it - level.begin());
    }
};

/// Boundary matrix from k-chains to (k-1)-chains: entries +-1 by the
/// alternating-face rule with orientations induced by sorted vertex order.
inline RatMat boundary_matrix(const SimplicialComplex& complex, int k) {
    if (k < 1 || k > complex.dim()) throw RangeError("boundary_matrix: degree out of range");
    RatMat m(complex.count(k - 1), complex.count(k));
    const auto& cols = complex.simplices(k);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t j = 0; j < cols[c].size(); ++j) {
            Simplex face = cols[c];
            face.erase(face.begin() + long(j));
            m(complex.index_of(face), c) = (j % 2 == 0) ? rat(1) : rat(-1);
        }
    return m;
}

struct HodgeOperators {
    SimplicialComplex complex;
    std::vector<std::vector<Rational>> weights; // diagonal, per degree
    std::vector<RatMat> d;     // d[k]: C^k -> C^{k+1} (coboundary)
    std::vector<RatMat> dstar; // dstar[k]: C^{k+1} -> C^k
    std::vector<RatMat> lap;   // Delta_k
    std::vector<RatMat> H;     // harmonic projector on C^k
    std::vector<RatMat> G;     // Green operator on C^k

    /// b_k = rank of the projector H_k = dim ker Delta_k.
    std::size_t betti(int k) const { return rank_field(H[std::size_t(k)]); }
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ValidationError("build_hodge: identity failed: " + what);
}

} // namespace detail

/// Builds d, d*, Delta, H, G per degree with the given positive diagonal
/// weights (identity if empty), then asserts the Hodge-theorem operator
/// identities exactly.
inline HodgeOperators build_hodge(const SimplicialComplex& complex,
                                  std::vector<std::vector<Rational>> weights = {}) {
    const int top = complex.dim();
    HodgeOperators ops;
    ops.complex = complex;
    if (weights.empty()) {
        weights.resize(std::size_t(top + 1));
        for (int k = 0; k <= top; ++k)
            weights[std::size_t(k)].assign(complex.count(k), rat(1));
    }
    if (int(weights.size()) != top + 1) throw ValidationError("build_hodge: weights per degree expected");
    for (int k = 0; k <= top; ++k) {
        if (weights[std::size_t(k)].size() != complex.count(k))
            throw ValidationError("build_hodge: weight vector length mismatch");
        for (const Rational& w : weights[std::size_t(k)])
            if (!(w > Rational(0))) throw ValidationError("build_hodge: weights must be positive");
    }
    ops.weights = weights;

    // coboundaries d[k] = (boundary_{k+1})^T; d[top] is empty (0 x n)
    for (int k = 0; k <= top; ++k) {
        if (k < top)
            ops.d.push_back(boundary_matrix(complex, k + 1).transposed());
        else
            ops.d.push_back(RatMat(0, complex.count(k)));
    }
    // dstar[k] = W_k^{-1} d[k]^T W_{k+1} : C^{k+1} -> C^k
    for (int k = 0; k <= top; ++k) {
        RatMat dt = ops.d[std::size_t(k)].transposed();
        RatMat out(dt.rows, dt.cols);
        for (std::size_t i = 0; i < dt.rows; ++i)
            for (std::size_t j = 0; j < dt.cols; ++j) {
                if (hodgekit::is_zero(dt(i, j))) continue;
                const Rational wk1 = (k < top) ? weights[std::size_t(k + 1)][j] : rat(1);
                out(i, j) = dt(i, j) * wk1 / weights[std::size_t(k)][i];
            }
        ops.dstar.push_back(out);
    }
    // Laplacians
    for (int k = 0; k <= top; ++k) {
        RatMat l(complex.count(k), complex.count(k));
        l = ops.dstar[std::size_t(k)] * ops.d[std::size_t(k)];
        if (k > 0) l = l + ops.d[std::size_t(k - 1)] * ops.dstar[std::size_t(k - 1)];
        ops.lap.push_back(l);
    }
    // harmonic projector H = K (K^T W K)^{-1} K^T W for a rational kernel
    // basis K of Delta
    for (int k = 0; k <= top; ++k) {
        RatMat K = kernel_basis(ops.lap[std::size_t(k)]);
        const std::size_t nk = complex.count(k);
        if (K.cols == 0) {
            ops.H.push_back(RatMat(nk, nk));
        } else {
            RatMat WK(nk, K.cols);
            for (std::size_t i = 0; i < nk; ++i)
                for (std::size_t j = 0; j < K.cols; ++j) WK(i, j) = weights[std::size_t(k)][i] * K(i, j);
            RatMat gram = K.transposed() * WK; // K^T W K
            ops.H.push_back(K * inverse(gram) * WK.transposed());
        }
    }
    // Green operator G = (Delta + H)^{-1} (I - H)
    for (int k = 0; k <= top; ++k) {
        const std::size_t nk = complex.count(k);
        RatMat id = RatMat::identity(nk);
        ops.G.push_back(inverse(ops.lap[std::size_t(k)] + ops.H[std::size_t(k)]) * (id - ops.H[std::size_t(k)]));
    }

    // exact identity assertions
    for (int k = 0; k <= top; ++k) {
        const RatMat& H = ops.H[std::size_t(k)];
        const RatMat& G = ops.G[std::size_t(k)];
        const RatMat& L = ops.lap[std::size_t(k)];
        RatMat id = RatMat::identity(complex.count(k));
        detail::require(H * H == H, "H^2 = H");
        // W-self-adjointness: W H = H^T W
        {
            RatMat WH(H.rows, H.cols), HtW(H.rows, H.cols);
            for (std::size_t i = 0; i < H.rows; ++i)
                for (std::size_t j = 0; j < H.cols; ++j) {
                    WH(i, j) = ops.weights[std::size_t(k)][i] * H(i, j);
                    HtW(i, j) = H(j, i) * ops.weights[std::size_t(k)][j];
                }
            detail::require(WH == HtW, "H self-adjoint");
        }
        detail::require(H + L * G == id, "I = H + Delta G");
        detail::require(H + G * L == id, "I = H + G Delta");
        detail::require((G * H).is_zero() && (H * G).is_zero(), "GH = HG = 0");
        detail::require((ops.d[std::size_t(k)] * H).is_zero(), "d H = 0");
        if (k < top) detail::require((ops.H[std::size_t(k + 1)] * ops.d[std::size_t(k)]).is_zero(), "H d = 0");
        if (k < top) {
            detail::require((H * ops.dstar[std::size_t(k)]).is_zero(), "H d* = 0");
            detail::require((ops.dstar[std::size_t(k)] * ops.H[std::size_t(k + 1)]).is_zero(), "d* H = 0");
            // [G, d] = 0 : G_{k+1} d_k = d_k G_k
            detail::require(ops.G[std::size_t(k + 1)] * ops.d[std::size_t(k)] ==
                                ops.d[std::size_t(k)] * ops.G[std::size_t(k)],
                            "[G, d] = 0");
            // [Delta, d] = 0
            detail::require(ops.lap[std::size_t(k + 1)] * ops.d[std::size_t(k)] ==
                                ops.d[std::size_t(k)] * ops.lap[std::size_t(k)],
                            "[Delta, d] = 0");
            // [G, d*] = 0 : G_k d*_k = d*_k G_{k+1}
            detail::require(ops.G[std::size_t(k)] * ops.dstar[std::size_t(k)] ==
                                ops.dstar[std::size_t(k)] * ops.G[std::size_t(k + 1)],
                            "[G, d*] = 0");
        }
        // ker Delta = ker d  intersect  ker d*
        {
            RatMat K = kernel_basis(L);
            detail::require((ops.d[std::size_t(k)] * K).is_zero(), "harmonic implies d-closed");
            if (k > 0)
                detail::require((ops.dstar[std::size_t(k - 1)] * K).is_zero(), "harmonic implies d*-closed");
            // stacked kernel has the same dimension
            const std::size_t rows_d = ops.d[std::size_t(k)].rows;
            const std::size_t rows_ds = (k > 0) ? ops.dstar[std::size_t(k - 1)].rows : 0;
            RatMat stacked(rows_d + rows_ds, complex.count(k));
            for (std::size_t i = 0; i < rows_d; ++i)
                for (std::size_t j = 0; j < complex.count(k); ++j) stacked(i, j) = ops.d[std::size_t(k)](i, j);
            for (std::size_t i = 0; i < rows_ds; ++i)
                for (std::size_t j = 0; j < complex.count(k); ++j)
                    stacked(rows_d + i, j) = ops.dstar[std::size_t(k - 1)](i, j);
            detail::require(complex.count(k) - rank(stacked) == K.cols, "ker Delta = ker d cap ker d*");
        }
    }
    return ops;
}

/// b_k = dim ker Delta_k, cross-checked against the rank-nullity cohomology
/// dimension nullity(d_k) - rank(d_{k-1}).
inline std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex) {
    HodgeOperators ops = build_hodge(complex);
    std::vector<std::size_t> out;
    for (int k = 0; k <= complex.dim(); ++k) {
        const std::size_t harmonic = kernel_basis(ops.lap[std::size_t(k)]).cols;
        const std::size_t nullity = complex.count(k) - rank(ops.d[std::size_t(k)]);
        const std::size_t prev_rank = (k > 0) ? rank(ops.d[std::size_t(k - 1)]) : 0;
        if (harmonic != nullity - prev_rank)
            throw ValidationError("betti_numbers: harmonic dimension disagrees with rank-nullity");
        out.push_back(harmonic);
    }
    return out;
}

/// phi = G eta when H eta = 0; Delta phi = eta and H phi = 0 exactly.
inline std::vector<Rational> solve_poisson(const HodgeOperators& ops, int k, const std::vector<Rational>& eta) {
    if (k < 0 || k > ops.complex.dim()) throw RangeError("solve_poisson: degree out of range");
    if (eta.size() != ops.complex.count(k)) throw ShapeError("solve_poisson: cochain has wrong length");
    std::vector<Rational> obstruction = ops.H[std::size_t(k)].apply(eta);
    bool zero = true;
    for (const Rational& v : obstruction)
        if (!hodgekit::is_zero(v)) zero = false;
    if (!zero) {
        std::string repr = "(";
        for (std::size_t i = 0; i < obstruction.size(); ++i)
            repr += to_fraction_string(obstruction[i]) + (i + 1 < obstruction.size() ? ", " : ")");
        throw NoSolutionError("solve_poisson: H(eta) != 0", repr);
    }
    return ops.G[std::size_t(k)].apply(eta);
}

// ---------------------------------------------------------------------------
// stock complexes

inline SimplicialComplex hollow_triangle() { return SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline SimplicialComplex solid_triangle() { return SimplicialComplex(3, {{0, 1, 2}}); }

/// Boundary of the octahedron: a 2-sphere with 6 vertices and 8 faces.
inline SimplicialComplex octahedron_sphere() {
    // poles 4, 5; equator 0-1-2-3
    return SimplicialComplex(6, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4},
                                 {0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {0, 3, 5}});
}

/// Moebius-Kantor (Csaszar) 7-vertex triangulation of the torus:
/// faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex seven_vertex_torus() {
    std::vector<Simplex> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex(7, faces);
}

} // namespace simplicial
} // namespace hodgekit
