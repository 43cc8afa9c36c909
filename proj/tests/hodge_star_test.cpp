#include <catch2/catch_amalgamated.hpp>

#include "hodgekit/hodge_star.hpp"

using namespace hodgekit;

namespace {

ComplexWord cw(std::initializer_list<int> a, std::initializer_list<int> b, std::initializer_list<int> m) {
    return ComplexWord(IndexSet(a), IndexSet(b), IndexSet(m));
}

} // namespace

TEST_CASE("star on real generators") {
    Form x1(1, RealWord::x(1), gr(1));
    Form y1(1, RealWord::y(1), gr(1));
    REQUIRE(star_real(x1) == y1);
    REQUIRE(star_real(y1) == x1.scaled(gr(-1)));
    // *(1) = volume form, n = 2
    Form one2(2, RealWord(), gr(1));
    REQUIRE(star_real(one2) == Form(2, RealWord::volume(2), gr(1)));
}

TEST_CASE("star on complex generators, n = 1") {
    ComplexForm z1(1, cw({1}, {}, {}), gr(1));
    REQUIRE(star_complex(z1) == z1.scaled(gr(0, -1)));
    ComplexForm w1(1, cw({}, {}, {1}), gr(1));
    REQUIRE(star_complex(w1) == ComplexForm(1, ComplexWord(), gr(0, -2)));
    ComplexForm one(1, ComplexWord(), gr(1));
    REQUIRE(star_complex(one) == w1.scaled(GaussianRational{rat(0), rat(1, 2)}));
}

TEST_CASE("a ^ *(conj b) = <a,b> vol on equal-degree word pairs, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        Form vol(n, RealWord::volume(n), gr(1));
        for (const auto& u : all_real_words(n))
            for (const auto& v : all_real_words(n)) {
                if (u.degree() != v.degree()) continue;
                Form a(n, u, gr(1)), b(n, v, gr(0, 1)); // a complex coefficient exercises conjugation
                Form lhs = wedge(a, star_real(conjugated(b)));
                Form rhs = vol.scaled(inner_product(a, b));
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("star twice gives (-1)^{p(2n-p)}, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : all_real_words(n)) {
            Form f(n, w, gr(1));
            const int p = w.degree();
            REQUIRE(star_real(star_real(f)) == f.scaled(minus_one_power(p * (2 * n - p))));
        }
}

TEST_CASE("star maps bidegree (p,q) into (n-q, n-p)") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : all_complex_words(n)) {
            ComplexForm image = star_complex(ComplexForm(n, w, gr(1)));
            for (const auto& [iw, c] : image.terms) {
                REQUIRE(iw.bidegree_p() == n - w.bidegree_q());
                REQUIRE(iw.bidegree_q() == n - w.bidegree_p());
            }
        }
}

TEST_CASE("star twice on complex words matches the real-basis sign") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : all_complex_words(n)) {
            ComplexForm f(n, w, gr(1));
            const int p = w.degree();
            REQUIRE(star_complex(star_complex(f)) == f.scaled(minus_one_power(p * (2 * n - p))));
        }
}

TEST_CASE("gamma formula agrees with brute force exhaustively") {
    for (int n = 1; n <= 3; ++n) {
        auto rep = check_star_agreement(n);
        REQUIRE(rep.words_checked == (1 << (2 * n)));
        REQUIRE(rep.ok());
    }
    REQUIRE_THROWS_AS(check_star_agreement(0), RangeError);
}
