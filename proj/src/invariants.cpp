#include "wrc/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "wrc/errors.hpp"

namespace wrc {

void validate_curve_params(int d, int e) {
    if (d < 1 || e < 1) throw parameter_error("curve parameters require d >= 1 and e >= 1");
}

// ------------------------------------------------------------- BettiTable

void BettiTable::add(int i, int j, long long n) {
    if (n == 0) return;
    entries_[{i, j}] += n;
    if (entries_[{i, j}] == 0) entries_.erase({i, j});
}

void BettiTable::set(int i, int j, long long n) {
    if (n == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = n;
}

long long BettiTable::get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_i() const {
    int m = 0;
    for (const auto& [k, v] : entries_) m = std::max(m, k.first);
    return m;
}

long long BettiTable::total(int i) const {
    long long s = 0;
    for (const auto& [k, v] : entries_)
        if (k.first == i) s += v;
    return s;
}

std::string BettiTable::render_m2() const {
    int imax = max_i();
    int jmax = 0;
    for (const auto& [k, v] : entries_) jmax = std::max(jmax, k.second - k.first);

    std::vector<std::vector<std::string>> cells(jmax + 2, std::vector<std::string>(imax + 2));
    for (int i = 0; i <= imax; ++i) cells[0][i + 1] = std::to_string(i);
    for (int r = 0; r <= jmax; ++r) {
        cells[r + 1][0] = std::to_string(r) + ":";
        for (int i = 0; i <= imax; ++i) {
            long long v = get(i, i + r);
            cells[r + 1][i + 1] = v == 0 ? "." : std::to_string(v);
        }
    }
    std::vector<std::size_t> width(imax + 2, 0);
    for (const auto& row : cells)
        for (int c = 0; c < static_cast<int>(row.size()); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (int c = 0; c < static_cast<int>(row.size()); ++c) {
            if (c) os << ' ';
            os << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------- Hilbert data

long long hilbert_function_R(int d, int e, long a) {
    validate_curve_params(d, e);
    if (a < 0) throw parameter_error("hilbert_function_R: degree must be >= 0");
    return static_cast<long long>(d) * a + 1 - (a % e);
}

RationalSeries hilbert_series_R(int d, int e) {
    validate_curve_params(d, e);
    BiPoly num = BiPoly::one();
    for (int k = 1; k <= e; ++k) num = num + BiPoly::term(k, 0, QQ(d - 1));
    num = num + BiPoly::term(e, 0, QQ(e - 1));
    return RationalSeries(num, {{one_minus(1), 1}, {one_minus(e), 1}});
}

RationalSeries hilbert_series_EN(int d, int e) {
    validate_curve_params(d, e);
    BiPoly num = BiPoly::one();
    for (int k = 1; k <= d + e - 2; ++k) {
        for (int i = 0; i <= k + 1; ++i) {
            ZZ c = ZZ(k) * binomial(d - 1, k + 1 - i) * binomial(e, i);
            if (c == 0) continue;
            if (k % 2) c = -c;
            num = num + BiPoly::term(k + 1 + i * (e - 1), 0, QQ(c));
        }
    }
    return RationalSeries(num, {{one_minus(1), d}, {one_minus(e), e}});
}

BettiTable betti_table_EN(int d, int e) {
    validate_curve_params(d, e);
    BettiTable t;
    t.set(0, 0, 1);
    for (int k = 1; k <= d + e - 2; ++k)
        for (int i = 0; i <= k + 1; ++i) {
            ZZ c = ZZ(k) * binomial(d - 1, k + 1 - i) * binomial(e, i);
            if (c != 0) t.add(k, k + 1 + i * (e - 1), to_ll(c));
        }
    return t;
}

CmReport cm_check(int d, int e) {
    validate_curve_params(d, e);
    CmReport r;
    r.codim = d + e - 2;
    r.pdim = betti_table_EN(d, e).max_i();
    r.cohen_macaulay = (r.codim == r.pdim);
    return r;
}

// -------------------------------------------------- associated graded ring

RationalSeries hilbert_series_gr(int d, int e, bool bigraded) {
    validate_curve_params(d, e);
    if (!bigraded) {
        BiPoly num = BiPoly::one() + BiPoly::term(1, 0, QQ(d + e - 2));
        return RationalSeries(num, {{one_minus(1), 2}});
    }
    BiPoly num = BiPoly::one() + BiPoly::term(1, 1, QQ(d - 2)) + BiPoly::term(1, e, QQ(e - 1)) -
                 BiPoly::term(2, e + 1, QQ(d + e - 2));
    return RationalSeries(num, {{one_minus(1, 1), 2}, {one_minus(1, e), 1}});
}

RationalSeries poincare_series(int d, int e, bool graded) {
    validate_curve_params(d, e);
    if (!graded) {
        BiPoly num = (BiPoly::one() + BiPoly::term(1, 0, QQ(1))).pow(2);
        BiPoly den = BiPoly::one() - BiPoly::term(1, 0, QQ(d + e - 2));
        return RationalSeries(num, {{den, 1}});
    }
    BiPoly num = (BiPoly::one() + BiPoly::term(1, 1, QQ(1))).pow(2) *
                 (BiPoly::one() + BiPoly::term(1, e, QQ(1)));
    BiPoly den = BiPoly::one() - BiPoly::term(1, 1, QQ(d - 2)) - BiPoly::term(1, e, QQ(e - 1)) -
                 BiPoly::term(2, e + 1, QQ(d + e - 2));
    return RationalSeries(num, {{den, 1}});
}

StrandBettis strand_bettis(int d, int e, int i) {
    validate_curve_params(d, e);
    if (i < 0) throw parameter_error("strand_bettis: homological degree must be >= 0");
    StrandBettis s;
    auto ipow = [](long long b, int n) {
        long long r = 1;
        for (int k = 0; k < n; ++k) r *= b;
        return r;
    };
    if (i == 0)
        s.linear = 1;
    else if (i == 1)
        s.linear = d;
    else
        s.linear = ipow(d - 2, i - 2) * static_cast<long long>(d - 1) * (d - 1);
    if (i == 0)
        s.twisted = 1;
    else
        s.twisted = static_cast<long long>(e) * ipow(e - 1, i - 1);
    return s;
}

ZZ poincare_total_betti(int d, int e, int i) {
    validate_curve_params(d, e);
    if (i < 0) throw parameter_error("poincare_total_betti: homological degree must be >= 0");
    if (i == 0) return ZZ(1);
    if (i == 1) return ZZ(d + e);
    ZZ r = ZZ(d + e - 1) * (d + e - 1);
    for (int k = 2; k < i; ++k) r *= (d + e - 2);
    return r;
}

// ------------------------------------------------------------------ Golod

ZZ coarse_betti_I(int d, int e, int i) {
    validate_curve_params(d, e);
    if (i < 0 || i > d + e - 3) return ZZ(0);
    return ZZ(i + 1) * binomial(d + e - 1, i + 2);
}

GolodReport golod_check(int d, int e, int order) {
    validate_curve_params(d, e);
    if (order < 5) throw parameter_error("golod_check: order must be >= 5");
    GolodReport rep;
    rep.order = order;

    // 1 - z^2 Poin_I(z), assembled from the coarsened resolution ranks.
    BiPoly den = BiPoly::one();
    for (int i = 0; i <= d + e - 3; ++i)
        den = den - BiPoly::term(i + 2, 0, QQ(coarse_betti_I(d, e, i)));

    BiPoly onez = BiPoly::one() + BiPoly::term(1, 0, QQ(1));
    BiPoly closed = onez.pow(d + e - 2) * (BiPoly::one() - BiPoly::term(1, 0, QQ(d + e - 2)));
    rep.closed_form = (den == closed);

    RationalSeries rhs(onez.pow(d + e), {{den, 1}});
    rep.series_identity = RationalSeries::series_equal(poincare_series(d, e, false), rhs, order);
    return rep;
}

} // namespace wrc
