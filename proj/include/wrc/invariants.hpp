#pragma once

#include <map>
#include <string>

#include "wrc/series.hpp"

namespace wrc {

/// Graded Betti numbers: (homological degree i, internal degree j) -> count.
class BettiTable {
public:
    void add(int i, int j, long long n);
    void set(int i, int j, long long n);
    long long get(int i, int j) const;
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
    int max_i() const;
    long long total(int i) const; // sum over j
    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

    /// Macaulay2 layout: column i, row j holds beta_{i,i+j}; dot for zero.
    std::string render_m2() const;

private:
    std::map<std::pair<int, int>, long long> entries_;
};

/// dim_k R_a = d*a + 1 - (a mod e).
long long hilbert_function_R(int d, int e, long a);

/// (1 + (d-1)(z + ... + z^e) + (e-1) z^e) / ((1-z)(1-z^e)).
RationalSeries hilbert_series_R(int d, int e);

/// Resolution-derived form over (1-z)^d (1-z^e)^e with the alternating
/// double-sum numerator.
RationalSeries hilbert_series_EN(int d, int e);

/// beta_{k,k+1+i(e-1)} = k * C(d-1, k+1-i) * C(e, i), i = 0..k+1, plus
/// beta_{0,0} = 1; contributions landing on one (k, degree) are summed.
BettiTable betti_table_EN(int d, int e);

struct CmReport {
    int codim = 0;
    int pdim = 0;
    bool cohen_macaulay = false;
};

/// codim = (d+e) - 2 vs projective dimension read off betti_table_EN.
CmReport cm_check(int d, int e);

/// Associated graded ring's Hilbert series; bigraded means numerator
/// 1 + (d-2)wz + (e-1)w^e z - (d+e-2) w^{e+1} z^2 over (1-wz)^2 (1-w^e z),
/// else (1 + (d+e-2)z) / (1-z)^2.
RationalSeries hilbert_series_gr(int d, int e, bool bigraded);

/// Poincare series of the residue field: graded
/// (1+wz)^2 (1+w^e z) / (1 - (d-2)wz - (e-1)w^e z - (d+e-2) w^{e+1} z^2),
/// ungraded (1+z)^2 / (1 - (d+e-2)z).
RationalSeries poincare_series(int d, int e, bool graded);

struct StrandBettis {
    long long linear = 0;  // beta_{i,i}
    long long twisted = 0; // beta_{i,ei}
};

/// Closed forms for the two extremal strands of the resolution of k
/// (meaningful as strand values for e >= 2; for e = 1 they coincide).
StrandBettis strand_bettis(int d, int e, int i);

/// Ungraded total beta_i of k over R: 1, d+e, (d+e-1)^2 (d+e-2)^{i-2}.
ZZ poincare_total_betti(int d, int e, int i);

struct GolodReport {
    bool series_identity = false; // Poin(z) == (1+z)^{d+e} / (1 - z^2 Poin_I(z))
    bool closed_form = false;     // 1 - z^2 Poin_I(z) == (1+z)^{d+e-2}(1-(d+e-2)z)
    int order = 0;
    bool ok() const { return series_identity && closed_form; }
};

/// Verifies the Golod equality as truncated series (order >= 5) and the
/// exact closed-form factorization of the denominator.
GolodReport golod_check(int d, int e, int order);

/// beta_i of I over S in the coarsened (ungraded) form (i+1) C(d+e-1, i+2).
ZZ coarse_betti_I(int d, int e, int i);

void validate_curve_params(int d, int e);

} // namespace wrc
