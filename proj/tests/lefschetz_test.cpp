#include <catch2/catch_amalgamated.hpp>

#include "hodgekit/lefschetz.hpp"

using namespace hodgekit;
using namespace hodgekit::lefschetz;

namespace {

ComplexWord cw(std::initializer_list<int> a, std::initializer_list<int> b, std::initializer_list<int> m) {
    return ComplexWord(IndexSet(a), IndexSet(b), IndexSet(m));
}

} // namespace

TEST_CASE("fundamental form of a Hermitian matrix") {
    auto om = standard_fundamental_form(2);
    const GaussianRational half_i{rat(0), rat(1, 2)};
    REQUIRE(om.terms.size() == 2);
    REQUIRE(om.coeff(cw({}, {}, {1})) == half_i);
    REQUIRE(om.coeff(cw({}, {}, {2})) == half_i);

    REQUIRE(fundamental_form(GrMat(2, 2)).is_zero());

    GrMat h = GrMat::identity(2);
    h(0, 0) = gr(2);
    auto om2 = fundamental_form(h);
    REQUIRE(om2.coeff(cw({}, {}, {1})) == gr(0, 1));
    REQUIRE(om2.coeff(cw({}, {}, {2})) == half_i);

    GrMat bad = GrMat::identity(2);
    bad(0, 1) = gr(0, 1); // not Hermitian unless mirrored by -i
    REQUIRE_THROWS_AS(fundamental_form(bad), ValidationError);

    // off-diagonal Hermitian entries land on z_mu ^ zbar_nu words
    GrMat herm = GrMat::identity(2);
    herm(0, 1) = gr(0, 1);
    herm(1, 0) = gr(0, -1);
    auto om3 = fundamental_form(herm);
    REQUIRE(om3.coeff(cw({1}, {2}, {})) == half_i * gr(0, 1));
}

TEST_CASE("L on generators matches the closed form") {
    ComplexForm one(2, ComplexWord(), gr(1));
    auto L1 = L_op(one);
    REQUIRE(L1 == L_closed_form(one));
    REQUIRE(L1.terms.size() == 2);

    ComplexForm z1(2, cw({1}, {}, {}), gr(1));
    auto Lz1 = L_op(z1);
    REQUIRE(Lz1.terms.size() == 1);
    REQUIRE(Lz1.coeff(cw({1}, {}, {2})) == GaussianRational{rat(0), rat(1, 2)});
    REQUIRE(Lz1 == L_closed_form(z1));

    ComplexForm w12(2, cw({}, {}, {1, 2}), gr(1));
    REQUIRE(L_op(w12).is_zero());

    for (int n = 1; n <= 3; ++n)
        for (const auto& w : all_complex_words(n)) {
            ComplexForm f(n, w, gr(1));
            REQUIRE(L_op(f) == L_closed_form(f));
        }
}

TEST_CASE("L* on generators") {
    ComplexForm one(1, ComplexWord(), gr(1));
    REQUIRE(Lstar_op(one).is_zero());
    ComplexForm w1(1, cw({}, {}, {1}), gr(1));
    REQUIRE(Lstar_op(w1) == ComplexForm(1, ComplexWord(), gr(0, -2)));
    ComplexForm z1(2, cw({1}, {}, {}), gr(1));
    REQUIRE(Lstar_op(L_op(z1)) == z1);
}

TEST_CASE("three routes to L* agree, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        REQUIRE(Lstar_matrix(n) == adjoint_matrix(L_matrix(n)));
        for (const auto& w : all_complex_words(n)) {
            ComplexForm f(n, w, gr(1));
            REQUIRE(Lstar_op(f) == Lstar_via_star(f));
        }
    }
}

TEST_CASE("adjoint property of L* under the inner product, n <= 2") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& u : all_complex_words(n))
            for (const auto& v : all_complex_words(n)) {
                ComplexForm fu(n, u, gr(1)), fv(n, v, gr(1));
                REQUIRE(inner_product(L_op(fu), fv) == inner_product(fu, Lstar_op(fv)));
            }
}

TEST_CASE("L raises bidegree by (1,1), L* lowers it") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : all_complex_words(n)) {
            for (const auto& [iw, c] : L_op(ComplexForm(n, w, gr(1))).terms) {
                REQUIRE(iw.bidegree_p() == w.bidegree_p() + 1);
                REQUIRE(iw.bidegree_q() == w.bidegree_q() + 1);
            }
            for (const auto& [iw, c] : Lstar_op(ComplexForm(n, w, gr(1))).terms) {
                REQUIRE(iw.bidegree_p() == w.bidegree_p() - 1);
                REQUIRE(iw.bidegree_q() == w.bidegree_q() - 1);
            }
        }
}

TEST_CASE("repeated L reaches zero within the ladder bound") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : all_complex_words(n)) {
            ComplexForm f(n, w, gr(1));
            const int room = n - w.M.size();
            for (int step = 0; step < room; ++step) f = L_op(f);
            // after filling every free slot one more L must vanish
            REQUIRE(L_op(f).is_zero());
        }
}

TEST_CASE("sl(2) bracket relations hold exactly for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        auto rep = check_sl2(n);
        REQUIRE(rep.bracket_B_L);
        REQUIRE(rep.bracket_B_Lstar);
        REQUIRE(rep.bracket_Lstar_L);
        REQUIRE(rep.weight_spectrum);
    }
    REQUIRE_THROWS_AS(check_sl2(0), RangeError);
}

TEST_CASE("weight examples of [L*, L]") {
    // n = 1: [L*,L] 1 = 1
    auto c1 = commutator(Lstar_matrix(1), L_matrix(1));
    ComplexForm one1(1, ComplexWord(), gr(1));
    REQUIRE(c1.apply(one1) == one1);
    // n = 2: [L*,L] z1 = z1 and on the volume-degree word it is -2
    auto c2 = commutator(Lstar_matrix(2), L_matrix(2));
    ComplexForm z1(2, cw({1}, {}, {}), gr(1));
    REQUIRE(c2.apply(z1) == z1);
    ComplexForm vol(2, cw({}, {}, {1, 2}), gr(1));
    REQUIRE(c2.apply(vol) == vol.scaled(gr(-2)));
}

TEST_CASE("general Hermitian metrics: L as wedge with Omega, L* as its adjoint") {
    GrMat h = GrMat::identity(2);
    h(0, 0) = gr(2);
    h(0, 1) = gr(0, 1);
    h(1, 0) = gr(0, -1);
    auto omega = fundamental_form(h);
    auto L = OperatorOnForms::from_action(2, [&](const ComplexForm& f) { return wedge(omega, f); });
    auto Ls = adjoint_matrix(L);
    // adjointness under the Hermitian inner product, exhaustively
    for (const auto& u : all_complex_words(2))
        for (const auto& v : all_complex_words(2)) {
            ComplexForm fu(2, u, gr(1)), fv(2, v, gr(1));
            REQUIRE(inner_product(L.apply(fu), fv) == inner_product(fu, Ls.apply(fv)));
        }
    // bidegree shifts survive the general metric
    for (const auto& u : all_complex_words(2))
        for (const auto& [w, c] : L.apply(ComplexForm(2, u, gr(1))).terms) {
            REQUIRE(w.bidegree_p() == u.bidegree_p() + 1);
            REQUIRE(w.bidegree_q() == u.bidegree_q() + 1);
        }
}

TEST_CASE("L and L* commute with w and J") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& w : all_complex_words(n)) {
            ComplexForm f(n, w, gr(1));
            REQUIRE(L_op(weight_w(f)) == weight_w(L_op(f)));
            REQUIRE(L_op(weight_J(f)) == weight_J(L_op(f)));
            REQUIRE(Lstar_op(weight_w(f)) == weight_w(Lstar_op(f)));
            REQUIRE(Lstar_op(weight_J(f)) == weight_J(Lstar_op(f)));
        }
}
