#include <doctest.h>

#include <algorithm>
#include <climits>

#include "test_helpers.hpp"
#include "wrc/curve.hpp"

using namespace wrc;

namespace {

Polynomial P(const std::string& s, VarSetPtr vs) { return parse_polynomial(s, vs); }

// Independent membership oracle: exhaustive search over coefficient
// combinations bounded by the coordinate sums.
bool member_brute_force(const std::vector<StMonomial>& gens, long i, long j, std::size_t k = 0) {
    if (i == 0 && j == 0) return true;
    if (k == gens.size()) return false;
    long maxc = LONG_MAX;
    if (gens[k].s_exp > 0) maxc = i / gens[k].s_exp;
    if (gens[k].t_exp > 0) maxc = std::min(maxc, j / gens[k].t_exp);
    for (long c = 0; c <= maxc; ++c)
        if (member_brute_force(gens, i - c * gens[k].s_exp, j - c * gens[k].t_exp, k + 1))
            return true;
    return false;
}

} // namespace

TEST_CASE("build_curve populates the series data") {
    CurveData c = build_curve(3, 2);
    CHECK(c.ambient->names() ==
          std::vector<std::string>{"x_0", "x_1", "x_2", "y_0", "y_1"});
    CHECK(c.ambient->weights() == std::vector<long>{1, 1, 1, 2, 2});
    CHECK(c.phi == std::vector<StMonomial>{{3, 0}, {2, 1}, {1, 2}, {1, 5}, {0, 6}});

    CurveData c62 = build_curve(6, 2);
    CHECK(c62.phi.front() == StMonomial{6, 0});
    CHECK(c62.phi[5] == StMonomial{1, 5});
    CHECK(c62.phi[6] == StMonomial{1, 11});
    CHECK(c62.phi.back() == StMonomial{0, 12});

    CurveData c41 = build_curve(4, 1);
    CHECK(c41.phi == std::vector<StMonomial>{{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}});

    CHECK_THROWS_AS(build_curve(0, 2), parameter_error);
    CHECK_THROWS_AS(build_curve(3, 0), parameter_error);
}

TEST_CASE("phi images are weighted-homogeneous of st-degree d * weight") {
    for (auto [d, e] : {std::pair{3, 2}, {1, 2}, {6, 2}, {2, 5}, {4, 1}}) {
        CurveData c = build_curve(d, e);
        for (std::size_t i = 0; i < c.phi.size(); ++i)
            CHECK(c.phi[i].total_degree() == (long)d * c.ambient->weight(i));
    }
}

TEST_CASE("matrix M for d=3, e=2 and its variants") {
    CurveData c = build_curve(3, 2);
    auto vs = c.ambient;

    TwoRowMatrix m = curve_matrix(c, MatrixVariant::M);
    REQUIRE(m.cols() == 4);
    CHECK(m.columns[0][0] == P("x_0", vs));
    CHECK(m.columns[1][0] == P("x_1", vs));
    CHECK(m.columns[2][0] == P("x_2^2", vs));
    CHECK(m.columns[3][0] == P("y_0", vs));
    CHECK(m.columns[0][1] == P("x_1", vs));
    CHECK(m.columns[1][1] == P("x_2", vs));
    CHECK(m.columns[2][1] == P("y_0", vs));
    CHECK(m.columns[3][1] == P("y_1", vs));

    TwoRowMatrix m0 = curve_matrix(c, MatrixVariant::M0);
    CHECK(m0.columns[2][0].is_zero());
    CHECK(m0.columns[2][1] == P("y_0", vs));

    TwoRowMatrix mv = curve_matrix(c, MatrixVariant::Mv);
    REQUIRE(mv.ambient->size() == 6);
    CHECK(mv.ambient->name(5) == "v");
    CHECK(mv.ambient->weight(5) == 2);
    CHECK(mv.columns[2][0] == Polynomial::variable(mv.ambient, 5));
}

TEST_CASE("e=1 specializes to the classical two-row matrix") {
    CurveData c = build_curve(4, 1);
    TwoRowMatrix m = curve_matrix(c, MatrixVariant::M);
    REQUIRE(m.cols() == 4);
    // top row x_0 x_1 x_2 x_3, bottom row x_1 x_2 x_3 y_0
    for (int i = 0; i < 3; ++i) {
        CHECK(m.columns[i][0] == Polynomial::variable(c.ambient, i));
        CHECK(m.columns[i][1] == Polynomial::variable(c.ambient, i + 1));
    }
    CHECK(m.columns[3][0] == Polynomial::variable(c.ambient, 3)); // x_3^1
    CHECK(m.columns[3][1] == Polynomial::variable(c.ambient, 4)); // y_0
}

TEST_CASE("minors of M for d=3, e=2 are the six listed generators") {
    CurveData c = build_curve(3, 2);
    auto vs = c.ambient;
    std::vector<Minor2x2> ms = minors2x2(curve_matrix(c, MatrixVariant::M));
    REQUIRE(ms.size() == 6);
    CHECK(ms[0].p == P("x_0*x_2-x_1^2", vs));
    CHECK(ms[1].p == P("x_0*y_0-x_1*x_2^2", vs));
    CHECK(ms[2].p == P("x_0*y_1-x_1*y_0", vs));
    CHECK(ms[3].p == P("x_1*y_0-x_2^3", vs));
    CHECK(ms[4].p == P("x_1*y_1-x_2*y_0", vs));
    CHECK(ms[5].p == P("x_2^2*y_1-y_0^2", vs));
    CHECK(ms[3].col_a == 1);
    CHECK(ms[3].col_b == 2);
}

TEST_CASE("minors of M_0 keep simplified monomial generators with sign +1") {
    CurveData c = build_curve(3, 2);
    auto vs = c.ambient;
    std::vector<Polynomial> ms = minor_polys(curve_matrix(c, MatrixVariant::M0));
    std::vector<Polynomial> want = {P("x_0*x_2-x_1^2", vs), P("x_0*y_0", vs),
                                    P("x_0*y_1-x_1*y_0", vs), P("x_1*y_0", vs),
                                    P("x_1*y_1-x_2*y_0", vs), P("y_0^2", vs)};
    CHECK(ms == want);
}

TEST_CASE("a 2x1 matrix has no minors") {
    CurveData c = build_curve(1, 1);
    CHECK(minors2x2(curve_matrix(c, MatrixVariant::M)).empty());
}

TEST_CASE("every minor collapses under phi and columns have ratio t/s") {
    for (auto [d, e] : {std::pair{3, 2}, {1, 2}, {4, 3}, {5, 1}, {2, 6}}) {
        CurveData c = build_curve(d, e);
        TwoRowMatrix m = curve_matrix(c, MatrixVariant::M);
        auto st = parameter_ring();
        for (const auto& col : m.columns) {
            // phi(bottom) * s == phi(top) * t
            Polynomial top = apply_phi(c, col[0]);
            Polynomial bot = apply_phi(c, col[1]);
            CHECK(bot * P("s", st) == top * P("t", st));
        }
        for (const auto& minor : minor_polys(m)) CHECK(apply_phi(c, minor).is_zero());
    }
}

TEST_CASE("minors lie in the toric kernel across the small grid") {
    for (int d = 1; d <= 5; ++d)
        for (int e = 1; d + e <= 7; ++e) {
            CurveData c = build_curve(d, e);
            IdealBasis oracle = toric_kernel(phi_images(c), c.ambient, order_w(c));
            for (const auto& m : minor_polys(curve_matrix(c, MatrixVariant::M)))
                CHECK(normal_form(m, oracle.gens, oracle.order).is_zero());
        }
}

TEST_CASE("semigroup membership for the d=3, e=2 curve") {
    CurveData c = build_curve(3, 2);
    SemigroupLambda sg = semigroup(c);
    REQUIRE(sg.generators.size() == 5);

    CHECK(!semigroup_member(sg, 0, 3)); // t^d is missing
    CHECK(semigroup_member(sg, 0, 6));  // t^{de} is a generator
    CHECK(semigroup_member(sg, 0, 0));
    CHECK(semigroup_member(sg, 2, 1));
    CHECK(!semigroup_member(sg, 0, 9));
    CHECK_THROWS_AS(semigroup_member(sg, -1, 0), parameter_error);
}

TEST_CASE("generator coordinate sums split d and de") {
    for (auto [d, e] : {std::pair{3, 2}, {2, 4}, {6, 2}}) {
        CurveData c = build_curve(d, e);
        SemigroupLambda sg = semigroup(c);
        REQUIRE(sg.generators.size() == static_cast<std::size_t>(d + e));
        for (int i = 0; i < d; ++i) CHECK(sg.generators[i].total_degree() == d);
        for (int i = d; i < d + e; ++i)
            CHECK(sg.generators[i].total_degree() == (long)d * e);
    }
}

TEST_CASE("membership agrees with brute-force enumeration") {
    std::mt19937_64 rng(wrctest::seed() + 20);
    std::uniform_int_distribution<long> coord(0, 14);
    for (auto [d, e] : {std::pair{3, 2}, {3, 3}, {1, 2}, {2, 5}}) {
        CurveData c = build_curve(d, e);
        SemigroupLambda sg = semigroup(c);
        for (int iter = 0; iter < 120; ++iter) {
            long i = coord(rng), j = coord(rng);
            CHECK(semigroup_member(sg, i, j) == member_brute_force(sg.generators, i, j));
        }
    }
}

TEST_CASE("lattice points of the d=3, e=2 curve up to degree 1") {
    CurveData c = build_curve(3, 2);
    auto pts = lattice_points(c, 1);
    CHECK(pts == std::vector<StMonomial>{{0, 0}, {3, 0}, {2, 1}, {1, 2}});
    CHECK(lattice_points(c, 0) == std::vector<StMonomial>{{0, 0}});
}

TEST_CASE("lattice grid flags the open dots of the two figures") {
    CurveData c32 = build_curve(3, 2);
    for (const auto& p : lattice_point_grid(c32, 6)) {
        bool open = (p.i == 0 && (p.j == 3 || p.j == 9 || p.j == 15));
        CHECK(p.member == !open);
    }
    CurveData c33 = build_curve(3, 3);
    for (const auto& p : lattice_point_grid(c33, 2)) {
        bool open = (p.i == 0 && (p.j == 3 || p.j == 6)) || (p.i == 1 && p.j == 5);
        CHECK(p.member == !open);
    }
}
