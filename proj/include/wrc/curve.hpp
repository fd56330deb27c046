#pragma once

#include <array>
#include <string>
#include <vector>

#include "wrc/grobner.hpp"
#include "wrc/poly.hpp"

namespace wrc {

/// Monomial s^s_exp * t^t_exp in the parameter ring k[s,t].
struct StMonomial {
    long s_exp = 0;
    long t_exp = 0;
    bool operator==(const StMonomial&) const = default;
    long total_degree() const { return s_exp + t_exp; }
};

/// Everything attached to the type-(d,e) curve: the graded coordinate
/// ring's variables (x_0..x_{d-1} of weight 1, y_0..y_{e-1} of weight e)
/// and the parametrizing monomial map.
struct CurveData {
    int d = 0;
    int e = 0;
    VarSetPtr ambient;
    std::vector<StMonomial> phi; // image of variable i, in ambient order
    const std::vector<StMonomial>& series() const { return phi; }
};

CurveData build_curve(int d, int e);

/// The parameter ring k[s,t] and phi images as polynomials over it.
VarSetPtr parameter_ring();
std::vector<Polynomial> phi_images(const CurveData& curve);

/// Applies phi to a polynomial over the curve's ambient ring.
Polynomial apply_phi(const CurveData& curve, const Polynomial& f);

/// The order that takes leading forms for the weight vector with a zero in
/// the slot of the last degree-1 variable, tie-broken degree-then-revlex
/// with y_0 > ... > y_{e-1} > x_0 > ... > x_{d-1}.
TermOrder order_w(const CurveData& curve);
TermOrder order_w(VarSetPtr xy_ambient, int d, int e);

enum class MatrixVariant { M, Mv, M0 };

/// Two-row matrix whose 2x2 minors cut out the curve; Mv swaps the
/// power entry for a fresh degree-e variable v, M0 for zero.
struct TwoRowMatrix {
    MatrixVariant variant = MatrixVariant::M;
    VarSetPtr ambient; // extended by v for Mv
    std::vector<std::array<Polynomial, 2>> columns;
    std::size_t cols() const { return columns.size(); }
};

TwoRowMatrix curve_matrix(const CurveData& curve, MatrixVariant variant);

struct Minor2x2 {
    std::size_t col_a = 0, col_b = 0;
    Polynomial p;
};

/// All nonzero 2x2 minors, one record per column pair. Monomial minors
/// (from a zero entry) are sign-normalized to +1.
std::vector<Minor2x2> minors2x2(const TwoRowMatrix& mat);
std::vector<Polynomial> minor_polys(const TwoRowMatrix& mat);

/// Ideal basis of the 2x2 minors of the given variant under order_w.
IdealBasis minor_basis(const CurveData& curve, MatrixVariant variant);

/// Affine semigroup generated by the exponent pairs of the series.
struct SemigroupLambda {
    std::vector<StMonomial> generators;
};

SemigroupLambda semigroup(const CurveData& curve);

/// Exact membership of (i,j) as a nonnegative integer combination of the
/// generators, by dynamic programming on the coordinate box.
bool semigroup_member(const SemigroupLambda& sg, long i, long j);

struct LatticePoint {
    long i = 0, j = 0;
    bool member = false;
};

/// Semigroup members with i + j <= d * max_degree.
std::vector<StMonomial> lattice_points(const CurveData& curve, int max_degree);

/// All candidate points (i + j a multiple of d, i + j <= d * max_degree)
/// with their membership flag, for CSV/JSON emission.
std::vector<LatticePoint> lattice_point_grid(const CurveData& curve, int max_degree);

} // namespace wrc
