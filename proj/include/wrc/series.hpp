#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wrc/qq.hpp"

namespace wrc {

/// Polynomial in z and w with exact rational coefficients, sparse on
/// (z-degree, w-degree) keys. Univariate values simply never touch w.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (z-degree, w-degree)

    BiPoly() = default;
    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return term(0, 0, QQ(1)); }
    static BiPoly term(int zdeg, int wdeg, const QQ& c);

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, QQ>& coeffs() const { return c_; }
    QQ coeff(int zdeg, int wdeg) const;
    /// Coefficient of z^zdeg as a polynomial in w.
    BiPoly coeff_z(int zdeg) const;
    int max_zdeg() const; // -1 for zero
    QQ constant_term() const { return coeff(0, 0); }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(const QQ& c) const;
    BiPoly pow(int n) const;
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }

    /// Drops all terms of z-degree > n.
    BiPoly truncate_z(int n) const;
    /// w := 1 (collapse w-degrees).
    BiPoly eval_w_one() const;
    /// z := 1 followed by renaming w to z.
    BiPoly eval_z_one_then_w_as_z() const;
    /// z := -z.
    BiPoly negate_z() const;

    std::string to_string(const std::string& zname = "z", const std::string& wname = "w") const;

private:
    std::map<Key, QQ> c_;
    void insert(int zdeg, int wdeg, const QQ& c);
};

/// Formal power series numerator / product of denominator factors. Each
/// factor must have nonzero constant term and every other term of positive
/// z-degree, so truncated expansion in z is well defined and exact.
class RationalSeries {
public:
    RationalSeries() : num_(BiPoly::one()) {}
    RationalSeries(BiPoly numerator, std::vector<std::pair<BiPoly, int>> denominator_factors);

    static RationalSeries polynomial(BiPoly p) { return RationalSeries(std::move(p), {}); }

    const BiPoly& numerator() const { return num_; }
    const std::vector<std::pair<BiPoly, int>>& denominator_factors() const { return den_; }

    /// All coefficients of z-degree <= order, exactly.
    BiPoly expand(int order) const;
    QQ coefficient(int zdeg, int wdeg = 0) const;

    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries specialize_w_one() const;
    /// z := 1, then the remaining w-series is re-expressed in z.
    RationalSeries specialize_z_one() const;
    RationalSeries negate_z() const;

    std::string to_string(const std::string& zname = "z", const std::string& wname = "w") const;

    static bool series_equal(const RationalSeries& a, const RationalSeries& b, int order = 25);

private:
    BiPoly num_;
    std::vector<std::pair<BiPoly, int>> den_;
};

/// Convenience factor (1 - w^wdeg * z^zdeg).
BiPoly one_minus(int zdeg, int wdeg = 0);

} // namespace wrc
