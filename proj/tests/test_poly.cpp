#include <doctest.h>

#include "test_helpers.hpp"
#include "wrc/curve.hpp"
#include "wrc/poly.hpp"

using namespace wrc;

namespace {

Polynomial P(const std::string& s, VarSetPtr vs) { return parse_polynomial(s, vs); }

} // namespace

TEST_CASE("varset validation") {
    CHECK_THROWS_AS(VarSet::make({"x", "x"}, {1, 1}), parameter_error);
    CHECK_THROWS_AS(VarSet::make({"x", "y"}, {1, 0}), parameter_error);
    auto vs = VarSet::make({"x_0", "y_0"}, {1, 2});
    CHECK(vs->index_of("y_0") == 1);
    CHECK(!vs->index_of("z"));
}

TEST_CASE("monomial arithmetic and weighted degree") {
    auto vs = VarSet::make({"x_0", "x_1", "y_0"}, {1, 1, 2});
    Monomial a({1, 2, 0}), b({0, 1, 3});
    CHECK((a * b).exponents() == std::vector<int>{1, 3, 3});
    CHECK(a.weighted_degree(*vs) == 3);
    CHECK(b.weighted_degree(*vs) == 7);
    CHECK((a * b).weighted_degree(*vs) == 10);
    CHECK(Monomial::lcm(a, b).exponents() == std::vector<int>{1, 2, 3});
    CHECK(b.divides(a * b));
    CHECK((a * b).quotient_by(b) == a);
    CHECK(!a.coprime_with(b));
    CHECK(Monomial({1, 0, 0}).coprime_with(Monomial({0, 0, 2})));
}

TEST_CASE("order_w reproduces the leading-term table for d=3, e=2") {
    CurveData c = build_curve(3, 2);
    TermOrder ord = order_w(c);
    auto vs = c.ambient;

    // w-weight comparison dominates: x_0*y_0 vs x_2^2*x_1 has weights 2 vs 1
    CHECK(compare(P("x_0*y_0", vs).terms()[0].mono, P("x_2^2*x_1", vs).terms()[0].mono, ord) ==
          Ordering::GT);
    // reflexivity
    Monomial m({1, 2, 0, 1, 0});
    CHECK(compare(m, m, ord) == Ordering::EQ);
    // x_1^2 beats x_0*x_2 so the pure-x minors lead with x_{i+1}x_j
    CHECK(compare(P("x_1^2", vs).terms()[0].mono, P("x_0*x_2", vs).terms()[0].mono, ord) ==
          Ordering::GT);

    // leading terms of all five minor families
    CHECK(leading_monomial(P("x_0*x_2-x_1^2", vs), ord) == P("x_1^2", vs).terms()[0].mono);
    CHECK(leading_monomial(P("x_0*y_1-x_1*y_0", vs), ord) == P("x_0*y_1", vs).terms()[0].mono);
    CHECK(leading_monomial(P("x_0*y_0-x_1*x_2^2", vs), ord) == P("x_0*y_0", vs).terms()[0].mono);
    CHECK(leading_monomial(P("x_1*y_0-x_2^3", vs), ord) == P("x_1*y_0", vs).terms()[0].mono);
    CHECK(leading_monomial(P("x_2^2*y_1-y_0^2", vs), ord) == P("y_0^2", vs).terms()[0].mono);
}

TEST_CASE("leading_term basics") {
    CurveData c = build_curve(3, 2);
    TermOrder ord = order_w(c);
    auto vs = c.ambient;
    Term lt = leading_term(P("x_0*y_1-x_1*y_0", vs), ord);
    CHECK(to_string(lt.mono, *vs) == "x_0*y_1");
    CHECK(lt.coeff == 1);

    Term c7 = leading_term(P("7", vs), ord);
    CHECK(c7.mono.is_one());
    CHECK(c7.coeff == 7);

    CHECK_THROWS_AS(leading_term(Polynomial::zero(vs), ord), zero_polynomial_error);
}

TEST_CASE("ambient mismatch is reported") {
    auto a = VarSet::make({"x", "y"}, {1, 1});
    auto b = VarSet::make({"x", "z"}, {1, 1});
    CHECK_THROWS_AS(P("x", a) + P("x", b), ambient_mismatch);
    TermOrder ord = TermOrder::grevlex(a);
    CHECK_THROWS_AS(leading_term(P("x", b), ord), ambient_mismatch);
    CHECK_THROWS_AS(ord.compare(Monomial(3), Monomial(2)), ambient_mismatch);
}

TEST_CASE("normal form examples") {
    CurveData c = build_curve(3, 2);
    TermOrder ord = order_w(c);
    auto vs = c.ambient;
    std::vector<Polynomial> minors = minor_polys(curve_matrix(c, MatrixVariant::M));
    REQUIRE(minors.size() == 6);

    // x_1^2 reduces to x_0*x_2 by the first minor alone
    CHECK(normal_form(P("x_1^2", vs), minors, ord) == P("x_0*x_2", vs));
    // dividing any g by [g] leaves nothing
    for (const auto& g : minors) CHECK(normal_form(g, {g}, ord).is_zero());
    // empty divisor list returns the input
    Polynomial f = P("x_0*y_1-3*x_2^2", vs);
    CHECK(normal_form(f, {}, ord) == f);
}

TEST_CASE("normal form is idempotent on random inputs") {
    CurveData c = build_curve(3, 2);
    TermOrder ord = order_w(c);
    std::vector<Polynomial> minors = minor_polys(curve_matrix(c, MatrixVariant::M));
    std::mt19937_64 rng(wrctest::seed());
    for (int iter = 0; iter < 300; ++iter) {
        Polynomial f = wrctest::random_polynomial(rng, c.ambient, 6, 4, 9);
        Polynomial r = normal_form(f, minors, ord);
        CHECK(normal_form(r, minors, ord) == r);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    auto vs = VarSet::make({"a", "b", "c", "u", "v"}, {1, 1, 2, 3, 1});
    std::mt19937_64 rng(wrctest::seed() + 1);
    for (int iter = 0; iter < 300; ++iter) {
        Polynomial f = wrctest::random_polynomial(rng, vs, 6, 3, 7);
        Polynomial g = wrctest::random_polynomial(rng, vs, 6, 3, 7);
        Polynomial h = wrctest::random_polynomial(rng, vs, 6, 3, 7);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * Polynomial::constant(vs, QQ(1)) == f);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("weighted degree is additive for homogeneous polynomials") {
    CurveData c = build_curve(4, 3);
    auto vs = c.ambient;
    std::mt19937_64 rng(wrctest::seed() + 2);
    std::uniform_int_distribution<int> pick(0, 6);
    auto random_homog = [&](long deg) {
        std::vector<Term> ts;
        for (const auto& m : standard_monomials(MonomialIdeal{}, deg, *vs))
            if (pick(rng) == 0) ts.push_back({m, QQ(1 + pick(rng))});
        return Polynomial::from_terms(vs, std::move(ts));
    };
    int done = 0;
    while (done < 40) {
        long da = 1 + pick(rng) % 4, db = 1 + pick(rng) % 4;
        Polynomial f = random_homog(da), g = random_homog(db);
        if (f.is_zero() || g.is_zero()) continue;
        REQUIRE(f.is_weighted_homogeneous());
        CHECK((f * g).weighted_degree() == f.weighted_degree() + g.weighted_degree());
        ++done;
    }
}

TEST_CASE("term order axioms hold, including for order_w with its zero weight") {
    std::mt19937_64 rng(wrctest::seed() + 3);
    for (auto [d, e] : {std::pair{3, 2}, {1, 2}, {5, 1}, {2, 4}}) {
        CurveData c = build_curve(d, e);
        TermOrder ord = order_w(c);
        std::size_t n = c.ambient->size();
        Monomial one = Monomial::one(n);
        for (int iter = 0; iter < 250; ++iter) {
            Monomial a = wrctest::random_monomial(rng, n, 4);
            Monomial b = wrctest::random_monomial(rng, n, 4);
            Monomial m = wrctest::random_monomial(rng, n, 3);
            Ordering ab = ord.compare(a, b);
            // EQ only on identical monomials (total order)
            CHECK((ab == Ordering::EQ) == (a == b));
            // multiplicative
            CHECK(ord.compare(a * m, b * m) == ab);
            // global: 1 is minimal
            if (!(a == one)) CHECK(ord.compare(a, one) == Ordering::GT);
            // antisymmetry
            Ordering ba = ord.compare(b, a);
            CHECK((ab == Ordering::GT) == (ba == Ordering::LT));
        }
    }
}

TEST_CASE("lex tie-break orders by precedence") {
    auto vs = VarSet::make({"a", "b", "c"}, {1, 1, 1});
    std::vector<std::size_t> prec = {2, 0, 1}; // c > a > b
    TermOrder ord(vs, {std::vector<long>(3, 1)}, TieBreak::Lex, prec);
    Monomial a2({2, 0, 0}), b2({0, 2, 0}), c2({0, 0, 2});
    CHECK(ord.compare(c2, a2) == Ordering::GT);
    CHECK(ord.compare(a2, b2) == Ordering::GT);
    // still degree-first
    CHECK(ord.compare(Monomial({3, 0, 0}), c2) == Ordering::GT);
}

TEST_CASE("no remainder term is divisible by a divisor lead") {
    CurveData c = build_curve(3, 2);
    TermOrder ord = order_w(c);
    std::vector<Polynomial> minors = minor_polys(curve_matrix(c, MatrixVariant::M));
    std::vector<Monomial> leads;
    for (const auto& g : minors) leads.push_back(leading_monomial(g, ord));
    std::mt19937_64 rng(wrctest::seed() + 5);
    for (int iter = 0; iter < 200; ++iter) {
        Polynomial f = wrctest::random_polynomial(rng, c.ambient, 6, 4, 9);
        Polynomial r = normal_form(f, minors, ord);
        for (const auto& t : r.terms())
            for (const auto& lm : leads) CHECK(!lm.divides(t.mono));
    }
}

TEST_CASE("render and parse round-trip") {
    CurveData c = build_curve(3, 2);
    auto vs = c.ambient;
    TermOrder ord = order_w(c);

    CHECK(to_string(P("x_0*x_2-x_1^2", vs), &ord) == "-x_1^2+x_0*x_2");
    CHECK(to_string(P("x_0*x_2-x_1^2", vs)) == "x_0*x_2-x_1^2");
    CHECK(to_string(Polynomial::zero(vs)) == "0");
    CHECK(parse_polynomial("0", vs).is_zero());
    CHECK(P("1/2*x_0+x_1-3", vs).coefficient(Monomial::var(5, 0)) == QQ(1, 2));

    std::mt19937_64 rng(wrctest::seed() + 4);
    for (int iter = 0; iter < 200; ++iter) {
        Polynomial f = wrctest::random_polynomial(rng, vs, 6, 4, 9);
        CHECK(parse_polynomial(to_string(f), vs) == f);
        CHECK(parse_polynomial(to_string(f, &ord), vs) == f);
    }

    CHECK_THROWS_AS(parse_polynomial("x_0 + q", vs), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x_0 x_1", vs), parse_error);
    CHECK_THROWS_AS(parse_polynomial("1/0", vs), parse_error);
}
