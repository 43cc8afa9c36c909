#pragma once

// Cech cohomology of a presented sheaf over an explicitly given nerve of a
// finite cover, with exact rational rank computations (fraction-free
// Bareiss elimination).
//
// The coboundary uses the full alternating sum over every deleted vertex
// j = 0..k; a sum that starts at j = 1 would not square to zero.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hodgekit/linalg.hpp"

namespace hodgekit {
namespace cech {

using Simplex = std::vector<int>; // strictly increasing cover indices

/// Nerve of a finite cover: stores the downward closure of the simplices
/// it is given, with a canonical (lexicographic) ordering per dimension.
struct Nerve {
    int cover_size = 0;
    std::vector<std::vector<Simplex>> by_dim; // by_dim[k] = k-simplices, sorted

    Nerve() = default;
    Nerve(int n, const std::vector<Simplex>& simplices) : cover_size(n) {
        std::set<Simplex> closed;
        for (Simplex s : simplices) {
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw ValidationError("Nerve: repeated vertex in a simplex");
            for (int v : s)
                if (v < 0 || v >= n) throw ValidationError("Nerve: vertex out of range");
            // all nonempty subsets
            const std::size_t m = s.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
                Simplex face;
                for (std::size_t b = 0; b < m; ++b)
                    if ((mask >> b) & 1u) face.push_back(s[b]);
                closed.insert(face);
            }
        }
        for (int v = 0; v < n; ++v)
            if (!closed.count({v})) throw ValidationError("Nerve: vertex " + std::to_string(v) + " missing");
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
    std::size_t index_of(const Simplex& s) const {
        const auto& level = simplices(int(s.size()) - 1);
        auto it = std::lower_bound(level.begin(), level.end(), s);
        if (it == level.end() || *it != s) throw RangeError("Nerve: unknown simplex");
        return std::size_t(it - level.begin());
    }
};

/// A sheaf presented on the nerve: a dimension per simplex and a
/// restriction matrix for each (face, simplex) incidence.
struct PresentedSheaf {
    Nerve nerve;
    std::map<Simplex, int> dim;
    std::map<std::pair<Simplex, Simplex>, RatMat> restriction; // (face, simplex) -> d(simplex) x d(face)

    int dim_of(const Simplex& s) const {
        auto it = dim.find(s);
        if (it == dim.end()) throw RangeError("PresentedSheaf: unknown simplex");
        return it->second;
    }
    const RatMat& restrict_to(const Simplex& face, const Simplex& simplex) const {
        auto it = restriction.find({face, simplex});
        if (it == restriction.end()) throw RangeError("PresentedSheaf: missing restriction");
        return it->second;
    }

    /// Commuting squares: dropping two vertices in either order restricts
    /// identically. Verified exhaustively.
    bool restrictions_consistent() const {
        for (int k = 2; k <= nerve.dim(); ++k)
            for (const Simplex& s : nerve.simplices(k))
                for (std::size_t u = 0; u < s.size(); ++u)
                    for (std::size_t v = u + 1; v < s.size(); ++v) {
                        Simplex su = s, sv = s, suv = s;
                        su.erase(su.begin() + long(u));
                        sv.erase(sv.begin() + long(v));
                        suv.erase(suv.begin() + long(v));
                        suv.erase(suv.begin() + long(u));
                        RatMat via_u = restrict_to(su, s) * restrict_to(suv, su);
                        RatMat via_v = restrict_to(sv, s) * restrict_to(suv, sv);
                        if (!(via_u == via_v)) return false;
                    }
        return true;
    }
};

/// Constant sheaf with stalk dimension d: every restriction the identity.
inline PresentedSheaf constant_sheaf(const Nerve& nerve, int d) {
    if (d < 0) throw RangeError("constant_sheaf: negative dimension");
    PresentedSheaf sheaf;
    sheaf.nerve = nerve;
    for (int k = 0; k <= nerve.dim(); ++k)
        for (const Simplex& s : nerve.simplices(k)) {
            sheaf.dim[s] = d;
            if (k == 0) continue;
            for (std::size_t j = 0; j < s.size(); ++j) {
                Simplex face = s;
                face.erase(face.begin() + long(j));
                sheaf.restriction[{face, s}] = RatMat::identity(std::size_t(d));
            }
        }
    return sheaf;
}

/// Dimension of the cochain group C^k.
inline std::size_t cochain_dim(const PresentedSheaf& sheaf, int k) {
    std::size_t total = 0;
    for (const Simplex& s : sheaf.nerve.simplices(k)) total += std::size_t(sheaf.dim_of(s));
    return total;
}

/// Block matrix of the coboundary C^k -> C^{k+1} with alternating-sign
/// restriction blocks, summing over every deleted vertex.
inline RatMat coboundary(const PresentedSheaf& sheaf, int k) {
    if (k < 0) throw RangeError("coboundary: negative degree");
    const Nerve& nerve = sheaf.nerve;
    const auto& rows_simpl = nerve.simplices(k + 1);
    const auto& cols_simpl = nerve.simplices(k);
    // offsets
    std::vector<std::size_t> row_off(rows_simpl.size() + 1, 0), col_off(cols_simpl.size() + 1, 0);
    for (std::size_t i = 0; i < rows_simpl.size(); ++i)
        row_off[i + 1] = row_off[i] + std::size_t(sheaf.dim_of(rows_simpl[i]));
    for (std::size_t i = 0; i < cols_simpl.size(); ++i)
        col_off[i + 1] = col_off[i] + std::size_t(sheaf.dim_of(cols_simpl[i]));
    RatMat m(row_off.back(), col_off.back());
    for (std::size_t r = 0; r < rows_simpl.size(); ++r) {
        const Simplex& s = rows_simpl[r];
        for (std::size_t j = 0; j < s.size(); ++j) {
            Simplex face = s;
            face.erase(face.begin() + long(j));
            const std::size_t c = nerve.index_of(face);
            const RatMat& block = sheaf.restrict_to(face, s);
            const Rational sign = (j % 2 == 0) ? rat(1) : rat(-1);
            for (std::size_t a = 0; a < block.rows; ++a)
                for (std::size_t b = 0; b < block.cols; ++b)
                    m(row_off[r] + a, col_off[c] + b) = m(row_off[r] + a, col_off[c] + b) + sign * block(a, b);
        }
    }
    return m;
}

/// dim H^k = nullity(delta_k) - rank(delta_{k-1}); validates delta^2 = 0.
inline std::vector<std::size_t> cohomology_dims(const PresentedSheaf& sheaf) {
    const Nerve& nerve = sheaf.nerve;
    if (!sheaf.restrictions_consistent())
        throw ValidationError("cohomology_dims: restriction squares do not commute");
    const int top = nerve.dim();
    std::vector<RatMat> delta;
    for (int k = 0; k <= top; ++k) delta.push_back(coboundary(sheaf, k));
    for (int k = 0; k + 1 <= top; ++k)
        if (!(delta[std::size_t(k + 1)] * delta[std::size_t(k)]).is_zero())
            throw ValidationError("cohomology_dims: delta^2 != 0 (inconsistent restrictions)");
    std::vector<std::size_t> dims;
    std::size_t prev_rank = 0;
    for (int k = 0; k <= top; ++k) {
        const std::size_t ck = cochain_dim(sheaf, k);
        const std::size_t rk = rank(delta[std::size_t(k)]);
        dims.push_back(ck - rk - prev_rank);
        prev_rank = rk;
    }
    return dims;
}

/// sum (-1)^k dim C^k, which must equal sum (-1)^k dim H^k.
inline long long euler_characteristic_cochain(const PresentedSheaf& sheaf) {
    long long chi = 0;
    for (int k = 0; k <= sheaf.nerve.dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * (long long)(cochain_dim(sheaf, k));
    return chi;
}

// ---------------------------------------------------------------------------
// stock nerves

/// Circle covered by m arcs (m >= 3): consecutive arcs overlap, no triple
/// overlaps.
inline Nerve circle_nerve(int arcs) {
    if (arcs < 3) throw RangeError("circle_nerve: need at least 3 arcs");
    std::vector<Simplex> simplices;
    for (int i = 0; i < arcs; ++i) simplices.push_back({i, (i + 1) % arcs});
    return Nerve(arcs, simplices);
}

/// Interval covered by m arcs in a row.
inline Nerve interval_nerve(int arcs) {
    if (arcs < 1) throw RangeError("interval_nerve: need at least 1 arc");
    std::vector<Simplex> simplices;
    simplices.push_back({0});
    for (int i = 0; i + 1 < arcs; ++i) simplices.push_back({i, i + 1});
    return Nerve(arcs, simplices);
}

/// Doubly periodic m x m grid cover of the torus whose nerve is the
/// standard diagonal triangulation: vertex (i,j), triangles
/// {(i,j),(i+1,j),(i+1,j+1)} and {(i,j),(i,j+1),(i+1,j+1)} mod m.
inline Nerve torus_grid_nerve(int m = 3) {
    if (m < 3) throw RangeError("torus_grid_nerve: need m >= 3");
    auto id = [m](int i, int j) { return ((i % m + m) % m) * m + ((j % m + m) % m); };
    std::vector<Simplex> simplices;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            simplices.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            simplices.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    return Nerve(m * m, simplices);
}

} // namespace cech
} // namespace hodgekit
