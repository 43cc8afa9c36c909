#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "hodgekit/bundles.hpp"
#include "hodgekit/chern.hpp"

using namespace hodgekit;
using namespace hodgekit::chern;

namespace {

ComplexWord cw(std::initializer_list<int> a, std::initializer_list<int> b, std::initializer_list<int> m) {
    return ComplexWord(IndexSet(a), IndexSet(b), IndexSet(m));
}

/// Characteristic coefficients by exact determinant expansion of principal
/// minors; the independent oracle for the Newton recursion.
std::vector<Rational> charpoly_coefficients(const RatMat& a) {
    const int r = int(a.rows);
    std::vector<Rational> out;
    for (int k = 1; k <= r; ++k) {
        Rational minorsum = rat(0);
        std::vector<int> idx;
        idx.resize(std::size_t(k));
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                RatMat m{std::size_t(k), std::size_t(k)};
                for (int x = 0; x < k; ++x)
                    for (int y = 0; y < k; ++y)
                        m(std::size_t(x), std::size_t(y)) =
                            a(std::size_t(idx[std::size_t(x)]), std::size_t(idx[std::size_t(y)]));
                minorsum += det(m);
                return;
            }
            for (int v = start; v <= r - (k - depth); ++v) {
                idx[std::size_t(depth)] = v;
                rec(v + 1, depth + 1);
            }
        };
        rec(0, 0);
        out.push_back(k % 2 == 0 ? minorsum : -minorsum);
    }
    return out;
}

} // namespace

TEST_CASE("newton identities on pinned examples") {
    std::vector<Rational> b{rat(3), rat(5)}; // A = diag(1,2)
    auto c = newton_c_from_b(b);
    REQUIRE(c == std::vector<Rational>{rat(-3), rat(2)});
    REQUIRE(newton_b_from_c(c) == b);

    std::vector<Rational> bi{rat(2), rat(2)}; // A = I_2
    REQUIRE(newton_c_from_b(bi) == std::vector<Rational>{rat(-2), rat(1)});

    REQUIRE(newton_c_from_b(std::vector<Rational>{rat(7)})[0] == rat(-7)); // c1 = -b1
}

TEST_CASE("newton recursion matches the characteristic-polynomial oracle on 50 random matrices") {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + rng() % 4;
        RatMat a(r, r);
        for (auto& v : a.data) v = rat(num(rng), den(rng));
        std::vector<Rational> b;
        RatMat p = a;
        for (std::size_t k = 1; k <= r; ++k) {
            Rational t = rat(0);
            for (std::size_t i = 0; i < r; ++i) t += p(i, i);
            b.push_back(t);
            if (k < r) p = p * a;
        }
        auto c = newton_c_from_b(b);
        REQUIRE(c == charpoly_coefficients(a));
        REQUIRE(newton_b_from_c(c) == b);
    }
}

TEST_CASE("newton identities over the even exterior ring") {
    // b_k = tr(Theta^k) for a diagonal matrix of commuting 2-forms
    ComplexForm w1(2, cw({}, {}, {1}), gr(1));
    ComplexForm w2(2, cw({}, {}, {2}), gr(1));
    std::vector<ComplexForm> b{w1 + w2, wedge(w1, w1) + wedge(w2, w2)};
    auto c = newton_c_from_b(b);
    REQUIRE(c[0] == (w1 + w2).scaled(gr(-1)));
    REQUIRE(c[1] == wedge(w1, w2)); // elementary symmetric in w1, w2
    REQUIRE(newton_b_from_c(c)[0] == b[0]);
    REQUIRE(newton_b_from_c(c)[1] == b[1]);
}

TEST_CASE("chern forms of simple curvature matrices") {
    using SF = bundles::SymbolicForm;
    auto h = bundles::fubini_study_metric(1);
    auto Theta = bundles::curvature(h.weights[0], 1);
    SF one_form(1, ComplexWord(), RationalFunction::one());

    auto cf = chern_forms(FormMat<SF>{{Theta}}, one_form);
    REQUIRE(cf.size() == 2);
    REQUIRE(cf[0] == one_form);
    REQUIRE(cf[1] == Theta.scaled(gr(0, 1))); // i Theta, in 2 pi units

    auto cz = chern_forms(FormMat<SF>{{SF(1)}}, one_form);
    REQUIRE(cz[0] == one_form);
    REQUIRE(cz[1].is_zero());

    ComplexForm o2(2, ComplexWord(), gr(1));
    ComplexForm w1(2, cw({}, {}, {1}), gr(1));
    ComplexForm w2(2, cw({}, {}, {2}), gr(1));
    ComplexForm zero(2);
    auto cd = chern_forms(FormMat<ComplexForm>{{w1, zero}, {zero, w2}}, o2);
    REQUIRE(cd[1] == (w1 + w2).scaled(gr(0, 1)));
    REQUIRE(cd[2] == wedge(w1, w2).scaled(gr(-1)));

    REQUIRE_THROWS_AS(chern_forms(FormMat<ComplexForm>{{w1, zero}}, o2), ShapeError);
}

TEST_CASE("c1 of a tensor product adds for line bundles") {
    using SF = bundles::SymbolicForm;
    auto h = bundles::fubini_study_metric(1);
    SF one_form(1, ComplexWord(), RationalFunction::one());
    auto theta1 = bundles::curvature(h.weights[0], 1);
    auto theta2 = bundles::curvature(h.weights[0] * h.weights[0], 1);
    auto c1 = chern_forms(FormMat<SF>{{theta1}}, one_form)[1];
    auto c2 = chern_forms(FormMat<SF>{{theta2}}, one_form)[1];
    auto csum = chern_forms(FormMat<SF>{{theta1 + theta1}}, one_form)[1];
    REQUIRE(c2 == csum);
    REQUIRE(c2 == c1 + c1);
}

TEST_CASE("frame invariance of chern forms") {
    ComplexForm o2(2, ComplexWord(), gr(1));
    ComplexForm w1(2, cw({}, {}, {1}), gr(1));
    ComplexForm w2(2, cw({}, {}, {2}), gr(1));
    ComplexForm zero(2);
    FormMat<ComplexForm> theta{{w1, zero}, {zero, w2}};

    GrMat twice = GrMat::identity(2);
    twice(0, 0) = twice(1, 1) = gr(2);
    REQUIRE(frame_invariance_check(theta, twice, o2));

    GrMat shear = GrMat::identity(2);
    shear(0, 1) = gr(1);
    REQUIRE(frame_invariance_check(theta, shear, o2));

    GrMat perm(2, 2);
    perm(0, 1) = gr(1);
    perm(1, 0) = gr(1);
    REQUIRE(frame_invariance_check(theta, perm, o2));

    GrMat singular(2, 2);
    singular(0, 0) = gr(1);
    REQUIRE_THROWS_AS(frame_invariance_check(theta, singular, o2), ValidationError);

    // also with symbolic scalar frame changes over the rational-function field
    using SF = bundles::SymbolicForm;
    SF one_form(2, ComplexWord(), RationalFunction::one());
    SF sw1(2, cw({}, {}, {1}), RationalFunction::var_z(1));
    SF sw2(2, cw({}, {}, {2}), RationalFunction::one() + RationalFunction::var_z(2));
    SF szero(2);
    FormMat<SF> stheta{{sw1, szero}, {szero, sw2}};
    Mat<RationalFunction> sa(2, 2);
    sa(0, 0) = RationalFunction::one();
    sa(0, 1) = RationalFunction::var_z(1);
    sa(1, 1) = RationalFunction::one();
    REQUIRE(frame_invariance_check(stheta, sa, one_form));
}

TEST_CASE("bianchi identity for connection matrices of polynomial 1-forms") {
    using PF = dolbeault::PolyForm;
    PF zero2(2);
    REQUIRE(bianchi_check(FormMat<PF>{{zero2, zero2}, {zero2, zero2}}).ok());

    PF z1dz2(2, cw({2}, {}, {}), PolyCoefficient::var_z(1));
    REQUIRE(bianchi_check(FormMat<PF>{{z1dz2, zero2}, {zero2, zero2}}).ok());

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> sc(-2, 2);
    for (int trial = 0; trial < 5; ++trial) {
        FormMat<PF> theta(2, std::vector<PF>(2, zero2));
        for (auto& row : theta)
            for (auto& f : row)
                for (int j = 1; j <= 2; ++j) {
                    PolyCoefficient holo = scale(PolyCoefficient::var_z(1), gr(sc(rng))) +
                                           scale(PolyCoefficient::var_c(2), gr(sc(rng))) +
                                           PolyCoefficient(gr(sc(rng)));
                    f.add_term(cw({j}, {}, {}), holo);
                    f.add_term(cw({}, {j}, {}), scale(PolyCoefficient::var_z(2), gr(sc(rng))));
                }
        auto rep = bianchi_check(theta);
        REQUIRE(rep.holds);
        REQUIRE(rep.residual_terms == 0);
        REQUIRE(trace_powers_closed(theta, 3));
    }
}

TEST_CASE("chern number of the hyperplane bundle on P^1 is 1") {
    auto h = bundles::fubini_study_metric(1);
    auto Theta = bundles::curvature(h.weights[0], 1);
    auto coeff = Theta.coeff(cw({}, {}, {1}));
    const double value = chern_number_p1_chart(coeff);
    REQUIRE(std::abs(value - 1.0) < 1e-6);
}
