#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "wrc/linalg.hpp"

using namespace wrc;
using namespace wrc::linalg;

namespace {

template <class T>
bool annihilates(const std::vector<std::vector<T>>& rows, const std::vector<T>& v) {
    for (const auto& r : rows) {
        T acc(0);
        for (std::size_t i = 0; i < v.size(); ++i) acc += r[i] * v[i];
        if (!(acc == 0)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("rref pivots and kernel of a small matrix") {
    // rank-2 matrix with a 1-dimensional kernel spanned by (1, -2, 1)
    std::vector<std::vector<long long>> rows = {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}};
    Rref<long long> r = rref<long long>(rows, 3);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
    auto ker = nullspace<long long>(rows, 3);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<long long>{1, -2, 1});
    CHECK(annihilates(rows, ker[0]));
}

TEST_CASE("kernel vectors of random integer matrices annihilate, both scalar types") {
    std::mt19937_64 rng(wrctest::seed() + 50);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t m = 2 + rng() % 4, n = 3 + rng() % 5;
        std::vector<std::vector<long long>> a(m, std::vector<long long>(n));
        std::vector<std::vector<ZZ>> az(m, std::vector<ZZ>(n));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = val(rng);
                az[i][j] = ZZ(static_cast<long>(a[i][j]));
            }
        auto k = nullspace<long long>(a, n);
        auto kz = nullspace<ZZ>(az, n);
        REQUIRE(k.size() == kz.size());
        for (const auto& v : k) CHECK(annihilates(a, v));
        for (const auto& v : kz) CHECK(annihilates(az, v));
        // the two instantiations produce the same primitive vectors
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(ZZ(static_cast<long>(k[i][j])) == kz[i][j]);
        // rank + nullity = n
        CHECK(rref<long long>(a, n).rows.size() + k.size() == n);
    }
}

TEST_CASE("row span tracks rank incrementally") {
    RowSpan<long long> span(4);
    CHECK(!span.add({1, 0, 2, 0}).empty());
    CHECK(!span.add({0, 1, 1, 0}).empty());
    CHECK(span.add({1, 1, 3, 0}).empty()); // dependent
    CHECK(!span.add({0, 0, 0, 5}).empty());
    CHECK(span.rank() == 3);
    CHECK(span.add({2, 2, 6, 0}).empty());
    CHECK(span.add(std::vector<long long>(4, 0)).empty());
}

TEST_CASE("int64 overflow is detected and the big-integer path agrees") {
    const long long big = (1LL << 62) + 12345;
    // combining these rows overflows the primitive int64 representation
    std::vector<std::vector<long long>> a = {{big, 1, 0}, {1, big, 1}};
    bool threw = false;
    try {
        nullspace<long long>(a, 3);
    } catch (const int_overflow&) {
        threw = true;
    }
    CHECK(threw);

    std::vector<std::vector<ZZ>> az(2, std::vector<ZZ>(3));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) az[i][j] = ZZ(static_cast<long>(a[i][j]));
    auto ker = nullspace<ZZ>(az, 3);
    REQUIRE(ker.size() == 1);
    CHECK(annihilates(az, ker[0]));
}

TEST_CASE("rows are kept primitive with positive lead") {
    std::vector<std::vector<long long>> a = {{-4, 8, -12}};
    Rref<long long> r = rref<long long>(a, 3);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0] == std::vector<long long>{1, -2, 3});
}
