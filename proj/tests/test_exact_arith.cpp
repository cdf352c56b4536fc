#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nlie/linalg.hpp"
#include "nlie/multipoly.hpp"
#include "nlie/rational.hpp"
#include "nlie/unipoly.hpp"

using namespace nlie;

namespace {

Rat rand_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
    return Rat(num(rng), den(rng));
}

UniPoly rand_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rat> cs;
    for (int i = 0; i <= d; ++i) cs.push_back(rand_rat(rng));
    return UniPoly::from_coeffs(std::move(cs));
}

UniPoly upoly(std::initializer_list<long> coeffs_low_first, std::string var = "t") {
    std::vector<Rat> cs;
    for (long c : coeffs_low_first) cs.emplace_back(c);
    return UniPoly::from_coeffs(std::move(cs), std::move(var));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK((Rat(2, 4)).denominator() == Rat(2));
    CHECK(Rat(-4, 8).str() == "-1/2");
    CHECK(Rat(3).str() == "3");
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);

    CHECK(Rat::from_string("3/6") == Rat(1, 2));
    CHECK(Rat::from_string(" -7 ") == Rat(-7));
    CHECK_THROWS(Rat::from_string("abc"));
    CHECK_THROWS(Rat::from_string("1/0"));

    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    Rat root;
    CHECK(Rat(4, 9).is_square(&root));
    CHECK(root == Rat(2, 3));
    CHECK_FALSE(Rat(2).is_square());
    CHECK_FALSE(Rat(-4).is_square());
}

TEST_CASE("rational round trips hold on random inputs") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Rat a = rand_rat(rng), b = rand_rat(rng);
        CHECK((a + b) - b == a);
        CHECK(a * Rat(1) == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("univariate polynomial arithmetic") {
    UniPoly p = upoly({1, 2, 1});  // t^2+2t+1
    UniPoly q = upoly({1, 1});     // t+1
    CHECK(poly_gcd(p, q) == q);
    CHECK(p == q * q);

    CHECK(upoly({-4, 0, 1}).eval(Rat(2)) == Rat(0));

    UniPoly a = upoly({16, 0, 8, 0, 1}, "z");  // z^4+8z^2+16
    UniPoly b = upoly({4, 0, 1}, "z");         // z^2+4
    auto [quot, rem] = a.divmod(b);
    CHECK(quot == b);
    CHECK(rem.is_zero());
    CHECK(a.exact_div(b) == b);
    CHECK_THROWS_AS(a.divmod(UniPoly()), std::domain_error);
    CHECK_THROWS_AS(upoly({1, 1}).exact_div(upoly({0, 1})), std::domain_error);

    CHECK(upoly({1, 2, 1}).derivative() == upoly({2, 2}));
    CHECK(upoly({0, 0, 3}).str() == "3*t^2");
    CHECK((upoly({-4, 0, 1})).str() == "t^2-4");

    // (t-1)^2 (t+2) has a double root at 1 and simple root at -2.
    UniPoly f = upoly({-1, 1}).pow(2) * upoly({2, 1});
    CHECK(f.root_multiplicity(Rat(1)) == 2);
    CHECK(f.root_multiplicity(Rat(-2)) == 1);
    CHECK(f.root_multiplicity(Rat(5)) == 0);

    CHECK_THROWS(upoly({1, 1}, "t") + upoly({1, 1}, "z"));
    CHECK(upoly({3}, "t") * upoly({0, 1}, "z") == upoly({0, 3}, "z"));
}

TEST_CASE("polynomial round trips and gcd divisibility on random inputs") {
    std::mt19937 rng(777);
    for (int i = 0; i < 200; ++i) {
        UniPoly p = rand_poly(rng, 5), q = rand_poly(rng, 5);
        CHECK((p + q) - q == p);
        if (!q.is_zero()) {
            CHECK((p * q).exact_div(q) == p);
            auto [quo, rem] = p.divmod(q);
            CHECK(p == quo * q + rem);
            CHECK(rem.degree() < q.degree());
        }
        UniPoly g = poly_gcd(p, q);
        if (!g.is_zero()) {
            CHECK(p.divmod(g).second.is_zero());
            CHECK(q.divmod(g).second.is_zero());
            CHECK(g.leading() == Rat(1));
        }
    }
}

TEST_CASE("rational functions reduce to lowest terms with monic denominator") {
    RatFunc r(upoly({0, -1, 1}), upoly({0, 1}));  // (t^2-t)/t
    CHECK(r.is_polynomial());
    CHECK(r.as_poly() == upoly({-1, 1}));

    CHECK(RatFunc(upoly({0, 1})).is_polynomial());

    RatFunc s(upoly({-1, 0, 1}), upoly({-2, 2}));  // (t^2-1)/(2t-2)
    CHECK(s == RatFunc(upoly({1, 1}), upoly({2})));
    CHECK(s.num() == Rat(1, 2) * upoly({1, 1}));
    CHECK(s.den() == upoly({1}));

    CHECK_THROWS_AS(RatFunc(upoly({1}), UniPoly()), std::domain_error);

    // 1 / (t^2 (t-1)): double pole at 0, simple pole at 1.
    RatFunc g(upoly({1}), upoly({0, 0, 1}) * upoly({-1, 1}));
    CHECK(g.pole_order_at(Rat(0)) == 2);
    CHECK(g.pole_order_at(Rat(1)) == 1);
    CHECK(g.pole_order_at(Rat(2)) == 0);
    CHECK(g.value_at(Rat(2)) == Rat(1, 4));
    CHECK_THROWS_AS(g.value_at(Rat(0)), std::domain_error);
    CHECK_FALSE(g.finite_at(Rat(0)));

    std::mt19937 rng(31);
    for (int i = 0; i < 50; ++i) {
        UniPoly p = rand_poly(rng, 4);
        UniPoly q = rand_poly(rng, 4);
        if (q.is_zero()) continue;
        RatFunc x(p, q);
        CHECK(poly_gcd(x.num(), x.den()).degree() <= 0);
        if (!x.is_zero()) CHECK(x * x.inv() == RatFunc(Rat(1)));
        RatFunc y(rand_poly(rng, 3), upoly({1}));
        CHECK((x + y) - y == x);
    }
}

TEST_CASE("multivariate polynomials") {
    MultiPoly x1 = MultiPoly::variable(3, 0);
    MultiPoly x2 = MultiPoly::variable(3, 1);
    MultiPoly x3 = MultiPoly::variable(3, 2);

    // d/dx1 (x1^2 x2) = 2 x1 x2
    MultiPoly p = x1 * x1 * x2;
    CHECK(p.partial(0) == Rat(2) * (x1 * x2));
    CHECK(p.partial(2).is_zero());
    CHECK(p.str() == "x1^2*x2");

    Matrix<MultiPoly> id3(3, 3, MultiPoly::zero(3));
    for (int i = 0; i < 3; ++i) id3.at(i, i) = MultiPoly::constant(3, Rat(1));
    CHECK(det_cofactor(id3) == MultiPoly::constant(3, Rat(1)));

    Matrix<MultiPoly> diag(3, 3, MultiPoly::zero(3));
    diag.at(0, 0) = x1;
    diag.at(1, 1) = x2;
    diag.at(2, 2) = x3;
    CHECK(det_cofactor(diag) == x1 * x2 * x3);

    CHECK_THROWS(x1 + MultiPoly::variable(2, 0));

    MultiPoly q = x1 * x1 + Rat(3) * x2;
    CHECK(q.eval({Rat(2), Rat(1), Rat(5)}) == Rat(7));
    CHECK(q.subst_var(0, Rat(2)) == MultiPoly::constant(3, Rat(4)) + Rat(3) * x2);
    // shift x1 -> x1 + 1 in x1^2: (x1+1)^2
    CHECK((x1 * x1).shift_var(0, Rat(1)) == x1 * x1 + Rat(2) * x1 + MultiPoly::constant(3, Rat(1)));
    CHECK(q.total_degree() == 2);
    CHECK(q.degree_in(1) == 1);

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int i = 0; i < 50; ++i) {
        MultiPoly a = Rat(c(rng)) * x1 + Rat(c(rng)) * (x2 * x3) + MultiPoly::constant(3, Rat(c(rng)));
        MultiPoly b = Rat(c(rng)) * (x1 * x2) + Rat(c(rng)) * x3;
        CHECK((a + b) - b == a);
        // product rule for partials
        CHECK((a * b).partial(0) == a.partial(0) * b + a * b.partial(0));
    }
}
