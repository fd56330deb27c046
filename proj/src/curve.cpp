#include "wrc/curve.hpp"

#include <algorithm>

namespace wrc {

CurveData build_curve(int d, int e) {
    if (d < 1 || e < 1) throw parameter_error("build_curve: need d >= 1 and e >= 1");
    std::vector<std::string> names;
    std::vector<long> weights;
    for (int i = 0; i < d; ++i) {
        names.push_back("x_" + std::to_string(i));
        weights.push_back(1);
    }
    for (int i = 0; i < e; ++i) {
        names.push_back("y_" + std::to_string(i));
        weights.push_back(e);
    }
    CurveData c;
    c.d = d;
    c.e = e;
    c.ambient = VarSet::make(std::move(names), std::move(weights));
    for (int i = 0; i < d; ++i) c.phi.push_back({d - i, i});
    for (int i = 0; i < e; ++i) c.phi.push_back({e - 1 - i, (long)e * d - (e - 1) + i});
    return c;
}

VarSetPtr parameter_ring() {
    static const VarSetPtr st = VarSet::make({"s", "t"}, {1, 1});
    return st;
}

std::vector<Polynomial> phi_images(const CurveData& curve) {
    VarSetPtr st = parameter_ring();
    std::vector<Polynomial> out;
    for (const auto& m : curve.phi) {
        Monomial mono({static_cast<int>(m.s_exp), static_cast<int>(m.t_exp)});
        out.push_back(Polynomial::term(st, std::move(mono), QQ(1)));
    }
    return out;
}

Polynomial apply_phi(const CurveData& curve, const Polynomial& f) {
    if (!f.ambient().same_as(*curve.ambient))
        throw ambient_mismatch("apply_phi: polynomial over a different variable set");
    VarSetPtr st = parameter_ring();
    Polynomial out = Polynomial::zero(st);
    for (const auto& t : f.terms()) {
        long se = 0, te = 0;
        for (std::size_t i = 0; i < curve.phi.size(); ++i) {
            se += curve.phi[i].s_exp * t.mono.exponent(i);
            te += curve.phi[i].t_exp * t.mono.exponent(i);
        }
        Monomial m({static_cast<int>(se), static_cast<int>(te)});
        out = out + Polynomial::term(st, std::move(m), t.coeff);
    }
    return out;
}

TermOrder order_w(VarSetPtr xy_ambient, int d, int e) {
    const std::size_t n = xy_ambient->size();
    if (n != static_cast<std::size_t>(d + e))
        throw parameter_error("order_w: ambient size does not match d+e");
    std::vector<long> w(n, 1);
    w[d - 1] = 0; // x_{d-1} carries weight zero
    std::vector<long> deg(n, 1);
    std::vector<std::size_t> prec;
    for (int i = 0; i < e; ++i) prec.push_back(d + i); // y_0 > ... > y_{e-1}
    for (int i = 0; i < d; ++i) prec.push_back(i);     // > x_0 > ... > x_{d-1}
    return TermOrder(std::move(xy_ambient), {std::move(w), std::move(deg)}, TieBreak::RevLex,
                     std::move(prec));
}

TermOrder order_w(const CurveData& curve) { return order_w(curve.ambient, curve.d, curve.e); }

TwoRowMatrix curve_matrix(const CurveData& curve, MatrixVariant variant) {
    const int d = curve.d, e = curve.e;
    VarSetPtr amb = curve.ambient;
    if (variant == MatrixVariant::Mv) {
        std::vector<std::string> names = amb->names();
        std::vector<long> weights = amb->weights();
        names.push_back("v");
        weights.push_back(e);
        amb = VarSet::make(std::move(names), std::move(weights));
    }
    auto var = [&](std::size_t i) { return Polynomial::variable(amb, i); };
    auto xpow = [&]() {
        switch (variant) {
        case MatrixVariant::M:
            return Polynomial::term(amb, Monomial::var(amb->size(), d - 1, e), QQ(1));
        case MatrixVariant::Mv:
            return var(amb->size() - 1);
        case MatrixVariant::M0:
            return Polynomial::zero(amb);
        }
        throw error("unreachable");
    };

    TwoRowMatrix m;
    m.variant = variant;
    m.ambient = amb;
    for (int i = 0; i + 1 <= d - 1; ++i) m.columns.push_back({var(i), var(i + 1)});
    m.columns.push_back({xpow(), var(d)}); // y_0 sits at index d
    for (int i = 0; i + 1 <= e - 1; ++i) m.columns.push_back({var(d + i), var(d + i + 1)});
    return m;
}

std::vector<Minor2x2> minors2x2(const TwoRowMatrix& mat) {
    std::vector<Minor2x2> out;
    for (std::size_t a = 0; a < mat.cols(); ++a) {
        for (std::size_t b = a + 1; b < mat.cols(); ++b) {
            Polynomial det = mat.columns[a][0] * mat.columns[b][1] -
                             mat.columns[b][0] * mat.columns[a][1];
            if (det.is_zero()) continue;
            if (det.term_count() == 1 && det.terms()[0].coeff < 0) det = -det;
            out.push_back({a, b, std::move(det)});
        }
    }
    return out;
}

std::vector<Polynomial> minor_polys(const TwoRowMatrix& mat) {
    std::vector<Polynomial> out;
    for (auto& m : minors2x2(mat)) out.push_back(std::move(m.p));
    return out;
}

IdealBasis minor_basis(const CurveData& curve, MatrixVariant variant) {
    if (variant == MatrixVariant::Mv)
        throw parameter_error("minor_basis: Mv lives in an extended ring; build the order explicitly");
    TwoRowMatrix m = curve_matrix(curve, variant);
    return IdealBasis{minor_polys(m), curve.ambient, order_w(curve), false};
}

SemigroupLambda semigroup(const CurveData& curve) { return SemigroupLambda{curve.phi}; }

bool semigroup_member(const SemigroupLambda& sg, long i, long j) {
    if (i < 0 || j < 0) throw parameter_error("semigroup_member: coordinates must be >= 0");
    const long si = i, sj = j;
    // reachable[a][b] over the box [0..i] x [0..j]
    std::vector<char> reach(static_cast<std::size_t>((si + 1) * (sj + 1)), 0);
    auto at = [&](long a, long b) -> char& { return reach[a * (sj + 1) + b]; };
    at(0, 0) = 1;
    for (long a = 0; a <= si; ++a) {
        for (long b = 0; b <= sj; ++b) {
            if (at(a, b)) continue;
            for (const auto& g : sg.generators) {
                if (g.s_exp <= a && g.t_exp <= b && at(a - g.s_exp, b - g.t_exp)) {
                    at(a, b) = 1;
                    break;
                }
            }
        }
    }
    return at(si, sj) != 0;
}

std::vector<StMonomial> lattice_points(const CurveData& curve, int max_degree) {
    std::vector<StMonomial> out;
    for (const auto& p : lattice_point_grid(curve, max_degree))
        if (p.member) out.push_back({p.i, p.j});
    return out;
}

std::vector<LatticePoint> lattice_point_grid(const CurveData& curve, int max_degree) {
    if (max_degree < 0) throw parameter_error("lattice_point_grid: max_degree must be >= 0");
    SemigroupLambda sg = semigroup(curve);
    const long cap = static_cast<long>(curve.d) * max_degree;
    std::vector<LatticePoint> out;
    for (long total = 0; total <= cap; total += curve.d)
        for (long i = total; i >= 0; --i) {
            long j = total - i;
            out.push_back({i, j, semigroup_member(sg, i, j)});
        }
    return out;
}

} // namespace wrc
