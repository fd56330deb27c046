#pragma once

#include <cstddef>
#include <vector>

#include "wrc/poly.hpp"

namespace wrc {

/// Generating set of an ideal together with the order used to inspect it.
/// is_groebner is only ever set after an S-pair verification or a
/// completed Buchberger run.
struct IdealBasis {
    std::vector<Polynomial> gens;
    VarSetPtr ambient;
    TermOrder order;
    bool is_groebner = false;
};

/// Antichain of monomials under divisibility (minimal generating set).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    static MonomialIdeal from_generators(std::vector<Monomial> gens);

    const std::vector<Monomial>& min_gens() const { return gens_; }
    bool contains(const Monomial& m) const; // divisibility by some generator
    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return gens_ != o.gens_; }

private:
    std::vector<Monomial> gens_; // sorted, no generator divides another
};

struct BuchbergerOptions {
    std::size_t pair_budget = 1'000'000; // hard cap on live S-pair queue
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

/// Buchberger's algorithm; returns the reduced, monic, auto-reduced basis
/// with generators sorted by leading monomial (ascending under the order).
IdealBasis buchberger(const IdealBasis& basis, const BuchbergerOptions& opts = {});

struct GroebnerCertificate {
    struct Failure {
        std::size_t i, j;
        Polynomial remainder;
    };
    bool ok = false;
    std::vector<Failure> failures;
};

/// Checks that every S-pair reduces to zero; failures carry the nonzero
/// remainder as a certificate.
GroebnerCertificate is_groebner_basis(const IdealBasis& basis);

/// Copy of `basis` with is_groebner set; precondition_error if the check fails.
IdealBasis verified(const IdealBasis& basis);

/// Minimal generators of the leading-term ideal. Requires basis.is_groebner.
MonomialIdeal initial_ideal(const IdealBasis& basis);

/// Monomials of the given weighted degree divisible by no generator of J.
std::vector<Monomial> standard_monomials(const MonomialIdeal& J, long degree, const VarSet& vars);
long long standard_monomial_count(const MonomialIdeal& J, long degree, const VarSet& vars);

/// Kernel of the monomial map sending ambient variable i to images[i]
/// (a monomial over a two-variable parameter ring), computed by elimination
/// and returned as a verified Groebner basis under `target_order`.
IdealBasis toric_kernel(const std::vector<Polynomial>& images, VarSetPtr ambient,
                        const TermOrder& target_order, const BuchbergerOptions& opts = {});

/// Ideal equality by mutual normal-form membership.
bool ideal_equal(const IdealBasis& a, const IdealBasis& b, const BuchbergerOptions& opts = {});

} // namespace wrc
