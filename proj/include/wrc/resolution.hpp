#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "wrc/curve.hpp"
#include "wrc/invariants.hpp"

namespace wrc {

/// The coordinate ring R = S/I with its verified Groebner basis, normal
/// forms and the graded standard-monomial basis. Multiplication of basis
/// monomials reduces to a single basis monomial because the basis consists
/// of pure difference binomials; this is asserted at construction.
class QuotientRing {
public:
    explicit QuotientRing(CurveData curve);

    const CurveData& curve() const { return curve_; }
    const IdealBasis& groebner() const { return gb_; }
    const TermOrder& order() const { return order_; }
    VarSetPtr ambient() const { return curve_.ambient; }

    /// Normal form of a monomial: a single standard monomial.
    const Monomial& nf_monomial(const Monomial& m) const;
    Polynomial nf(const Polynomial& f) const;

    /// Standard monomials of the given weighted degree, sorted; the count
    /// is checked against d*a + 1 - (a mod e) once per degree.
    const std::vector<Monomial>& std_monomials(long degree) const;
    long dim(long degree) const;
    /// Position of a standard monomial inside std_monomials(degree).
    std::size_t index_of(long degree, const Monomial& m) const;

private:
    CurveData curve_;
    TermOrder order_;
    IdealBasis gb_;
    MonomialIdeal lead_ideal_;
    std::vector<Monomial> leads_, tails_; // per basis element, under order_
    mutable std::unordered_map<Monomial, Monomial, MonomialHash> nf_cache_;
    mutable std::vector<std::vector<Monomial>> basis_cache_;
    mutable std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_cache_;
    void ensure_degree(long degree) const;
};

/// One differential of the resolution. Columns are indexed by the source
/// generators (one per twist), rows by the previous module's generators;
/// entries are in normal form.
struct ResolutionStep {
    std::vector<long> source_twists; // generator degrees, ascending
    std::vector<std::vector<Polynomial>> entries; // entries[row][col]
};

/// Truncated minimal graded free resolution of k over R. steps[0] maps
/// F_1 (the variables) onto the maximal ideal; F_0 = R is implicit.
struct Resolution {
    int d = 0, e = 0;
    int steps_requested = 0;
    long degree_cap = 0;
    std::vector<ResolutionStep> steps;
    bool complete = true;
};

/// degree_cap was too small for the requested steps; carries what was
/// computed below the cap.
struct incomplete_resolution : error {
    Resolution partial;
    incomplete_resolution(std::string msg, Resolution p)
        : error(std::move(msg)), partial(std::move(p)) {}
};

long default_degree_cap(const CurveData& curve, int steps);

/// Minimal resolution of k over R, computed degree-by-degree by exact
/// integer linear algebra. Generators of homological degree i are searched
/// for in internal degrees up to min(degree_cap, e*i + slack); slack lets
/// tests certify emptiness beyond the structural bound. degree_cap <= 0
/// selects the default cap.
Resolution resolve_k(const QuotientRing& ring, int steps, long degree_cap = 0, int slack = 0);
Resolution resolve_k(const CurveData& curve, int steps, long degree_cap = 0, int slack = 0);

/// Same computation forced onto arbitrary-precision integers; resolve_k
/// falls back to this on int64 overflow.
Resolution resolve_k_bigint(const QuotientRing& ring, int steps, long degree_cap = 0,
                            int slack = 0);

BettiTable betti_from_resolution(const Resolution& res);

struct ResolutionCheck {
    bool differentials_compose_to_zero = false;
    bool minimal = false; // no unit entries; all entries of positive degree
    bool graded = false;  // entry(r,c) homogeneous of degree twist_c - twist_r
    bool ok() const { return differentials_compose_to_zero && minimal && graded; }
};

/// Entrywise d.d = 0 after normal-form reduction, minimality and
/// homogeneity of every differential entry.
ResolutionCheck verify_resolution(const QuotientRing& ring, const Resolution& res);

} // namespace wrc
