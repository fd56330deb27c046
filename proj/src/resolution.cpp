#include "wrc/resolution.hpp"

#include <algorithm>
#include <map>

#include "wrc/linalg.hpp"

namespace wrc {

// ------------------------------------------------------------ QuotientRing

QuotientRing::QuotientRing(CurveData curve)
    : curve_(std::move(curve)), order_(order_w(curve_)), gb_{{}, curve_.ambient, order_, false} {
    gb_ = buchberger(minor_basis(curve_, MatrixVariant::M));
    lead_ideal_ = initial_ideal(gb_);
    for (const auto& g : gb_.gens) {
        Term lt = leading_term(g, order_);
        bool pure = g.term_count() == 2 && lt.coeff == 1;
        if (pure) {
            for (const auto& t : g.terms())
                if (t.coeff != 1 && t.coeff != -1) pure = false;
        }
        if (!pure)
            throw error("QuotientRing: basis is not a set of pure difference binomials");
        Monomial tail = g.terms()[0].mono == lt.mono ? g.terms()[1].mono : g.terms()[0].mono;
        leads_.push_back(lt.mono);
        tails_.push_back(std::move(tail));
    }
}

const Monomial& QuotientRing::nf_monomial(const Monomial& m) const {
    auto it = nf_cache_.find(m);
    if (it != nf_cache_.end()) return it->second;
    Monomial cur = m;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (std::size_t k = 0; k < leads_.size(); ++k) {
            if (leads_[k].divides(cur)) {
                cur = cur.quotient_by(leads_[k]) * tails_[k];
                reduced = true;
                break;
            }
        }
    }
    return nf_cache_.emplace(m, std::move(cur)).first->second;
}

Polynomial QuotientRing::nf(const Polynomial& f) const {
    std::vector<Term> out;
    out.reserve(f.term_count());
    for (const auto& t : f.terms()) out.push_back({nf_monomial(t.mono), t.coeff});
    return Polynomial::from_terms(f.ambient_ptr(), std::move(out));
}

void QuotientRing::ensure_degree(long degree) const {
    while (static_cast<long>(basis_cache_.size()) <= degree) {
        long a = static_cast<long>(basis_cache_.size());
        std::vector<Monomial> basis = standard_monomials(lead_ideal_, a, *curve_.ambient);
        long long expect = hilbert_function_R(curve_.d, curve_.e, a);
        if (static_cast<long long>(basis.size()) != expect)
            throw error("QuotientRing: standard monomial count disagrees with the Hilbert function");
        std::unordered_map<Monomial, std::size_t, MonomialHash> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
        basis_cache_.push_back(std::move(basis));
        index_cache_.push_back(std::move(index));
    }
}

const std::vector<Monomial>& QuotientRing::std_monomials(long degree) const {
    if (degree < 0) throw parameter_error("std_monomials: negative degree");
    ensure_degree(degree);
    return basis_cache_[degree];
}

long QuotientRing::dim(long degree) const {
    if (degree < 0) return 0;
    ensure_degree(degree);
    return static_cast<long>(basis_cache_[degree].size());
}

std::size_t QuotientRing::index_of(long degree, const Monomial& m) const {
    ensure_degree(degree);
    auto it = index_cache_[degree].find(m);
    if (it == index_cache_[degree].end()) throw error("index_of: not a standard monomial");
    return it->second;
}

// ------------------------------------------------------------- resolve_k

long default_degree_cap(const CurveData& curve, int steps) {
    return static_cast<long>(curve.e) * steps + curve.d + curve.e;
}

namespace {

// Coordinates of the degree-a slice of a free module with the given
// generator degrees: one block of standard monomials per generator.
struct SliceIndex {
    std::vector<long> offsets; // offsets[g], block empty when twist > a
    long total = 0;

    SliceIndex(const QuotientRing& ring, const std::vector<long>& twists, long a) {
        offsets.reserve(twists.size());
        for (long t : twists) {
            offsets.push_back(total);
            if (a >= t) total += ring.dim(a - t);
        }
    }
};

long long qq_to_ll(const QQ& q) {
    if (q.get_den() != 1) throw error("resolution: non-integer coefficient");
    return to_ll(ZZ(q.get_num()));
}

template <class T>
T scalar_from_ll(long long v);
template <>
long long scalar_from_ll<long long>(long long v) {
    return v;
}
template <>
ZZ scalar_from_ll<ZZ>(long long v) {
    return ZZ(static_cast<long>(v));
}

template <class T>
QQ scalar_to_qq(const T& v);
template <>
QQ scalar_to_qq<long long>(const long long& v) {
    QQ q;
    q = static_cast<long>(v);
    return q;
}
template <>
QQ scalar_to_qq<ZZ>(const ZZ& v) {
    return QQ(v);
}

template <class T>
struct StepState {
    std::vector<long> twists;                     // generator degrees of F_i
    std::vector<std::vector<Polynomial>> entries; // d_i : entries[row][col]
};

/// Matrix of d_i on the degree-a slice, rows over (F_{i-1})_a coordinates.
template <class T>
std::vector<std::vector<T>> slice_matrix(const QuotientRing& ring,
                                         const std::vector<long>& prev_twists,
                                         const StepState<T>& cur, long a,
                                         const SliceIndex& rows_ix, const SliceIndex& cols_ix) {
    std::vector<std::vector<T>> A(rows_ix.total, std::vector<T>(cols_ix.total, T(0)));
    for (std::size_t c = 0; c < cur.twists.size(); ++c) {
        long tc = cur.twists[c];
        if (a < tc) continue;
        const auto& us = ring.std_monomials(a - tc);
        for (std::size_t r = 0; r < prev_twists.size(); ++r) {
            long tr = prev_twists[r];
            const Polynomial& p = cur.entries[r][c];
            if (p.is_zero()) continue;
            for (const auto& term : p.terms()) {
                long long coeff = qq_to_ll(term.coeff);
                for (std::size_t k = 0; k < us.size(); ++k) {
                    const Monomial& nf = ring.nf_monomial(term.mono * us[k]);
                    std::size_t row = rows_ix.offsets[r] + ring.index_of(a - tr, nf);
                    A[row][cols_ix.offsets[c] + k] += scalar_from_ll<T>(coeff);
                }
            }
        }
    }
    return A;
}

/// Image of a degree-(a-w) slice vector under multiplication by variable v.
template <class T>
std::vector<T> multiply_slice(const QuotientRing& ring, const std::vector<long>& twists,
                              std::size_t var, long w, const std::vector<T>& vec, long a,
                              const SliceIndex& from_ix, const SliceIndex& to_ix) {
    std::vector<T> out(to_ix.total, T(0));
    Monomial xv = Monomial::var(ring.ambient()->size(), var);
    for (std::size_t g = 0; g < twists.size(); ++g) {
        long t = twists[g];
        if (a - w < t) continue;
        const auto& us = ring.std_monomials(a - w - t);
        for (std::size_t k = 0; k < us.size(); ++k) {
            const T& c = vec[from_ix.offsets[g] + k];
            if (c == 0) continue;
            const Monomial& nf = ring.nf_monomial(us[k] * xv);
            out[to_ix.offsets[g] + ring.index_of(a - t, nf)] += c;
        }
    }
    return out;
}

template <class T>
Resolution resolve_impl(const QuotientRing& ring, int steps, long cap, int slack) {
    const CurveData& curve = ring.curve();
    const int d = curve.d, e = curve.e;

    Resolution res;
    res.d = d;
    res.e = e;
    res.steps_requested = steps;
    res.degree_cap = cap;

    // d_1: one row, the variables in ambient order.
    StepState<T> cur;
    std::vector<long> prev_twists{0};
    {
        std::vector<Polynomial> row;
        for (std::size_t i = 0; i < curve.ambient->size(); ++i) {
            row.push_back(Polynomial::variable(curve.ambient, i));
            cur.twists.push_back(curve.ambient->weight(i));
        }
        cur.entries.push_back(std::move(row));
    }
    {
        ResolutionStep s;
        s.source_twists = cur.twists;
        s.entries = cur.entries;
        res.steps.push_back(std::move(s));
    }

    for (int next = 2; next <= steps; ++next) {
        const long structural_bound = static_cast<long>(e) * next;
        const long bound = std::min(cap, structural_bound + slack);
        const bool capped = cap < structural_bound;

        std::map<long, std::vector<std::vector<T>>> kernels;
        std::vector<long> new_twists;
        std::vector<std::pair<long, std::vector<T>>> new_gens; // (degree, slice vector)

        long a0 = cur.twists.empty()
                      ? bound + 1 // zero module: the resolution has terminated
                      : *std::min_element(cur.twists.begin(), cur.twists.end()) + 1;
        for (long a = a0; a <= bound; ++a) {
            SliceIndex rows_ix(ring, prev_twists, a);
            SliceIndex cols_ix(ring, cur.twists, a);
            if (cols_ix.total == 0) continue;
            auto A = slice_matrix<T>(ring, prev_twists, cur, a, rows_ix, cols_ix);
            auto K = linalg::nullspace<T>(A, cols_ix.total);

            linalg::RowSpan<T> span(cols_ix.total);
            for (std::size_t v = 0; v < curve.ambient->size(); ++v) {
                long w = curve.ambient->weight(v);
                auto it = kernels.find(a - w);
                if (it == kernels.end()) continue;
                SliceIndex from_ix(ring, cur.twists, a - w);
                for (const auto& kv : it->second)
                    span.add(multiply_slice<T>(ring, cur.twists, v, w, kv, a, from_ix, cols_ix));
            }
            for (const auto& kv : K) {
                std::vector<T> picked = span.add(kv);
                if (!picked.empty()) {
                    new_twists.push_back(a);
                    new_gens.push_back({a, std::move(picked)});
                }
            }
            kernels.emplace(a, std::move(K));
            if (a - e >= a0) kernels.erase(a - e); // only the last e degrees are needed
        }

        // Assemble d_{next}.
        StepState<T> nxt;
        nxt.twists = new_twists;
        nxt.entries.assign(cur.twists.size(), std::vector<Polynomial>());
        for (auto& row : nxt.entries)
            row.assign(new_gens.size(), Polynomial::zero(curve.ambient));
        for (std::size_t col = 0; col < new_gens.size(); ++col) {
            long a = new_gens[col].first;
            const auto& vec = new_gens[col].second;
            SliceIndex ix(ring, cur.twists, a);
            for (std::size_t g = 0; g < cur.twists.size(); ++g) {
                long t = cur.twists[g];
                if (a < t) continue;
                const auto& us = ring.std_monomials(a - t);
                std::vector<Term> terms;
                for (std::size_t k = 0; k < us.size(); ++k) {
                    QQ c = scalar_to_qq<T>(vec[ix.offsets[g] + k]);
                    if (c != 0) terms.push_back({us[k], c});
                }
                nxt.entries[g][col] = Polynomial::from_terms(curve.ambient, std::move(terms));
            }
        }

        ResolutionStep s;
        s.source_twists = nxt.twists;
        s.entries = nxt.entries;
        res.steps.push_back(std::move(s));

        if (capped) {
            res.complete = false;
            throw incomplete_resolution(
                "resolve_k: degree cap " + std::to_string(cap) +
                    " is below the structural bound " + std::to_string(structural_bound) +
                    " for step " + std::to_string(next),
                res);
        }

        prev_twists = cur.twists;
        cur = std::move(nxt);
    }
    return res;
}

} // namespace

Resolution resolve_k(const QuotientRing& ring, int steps, long degree_cap, int slack) {
    if (steps < 1) throw parameter_error("resolve_k: steps must be >= 1");
    if (slack < 0) throw parameter_error("resolve_k: slack must be >= 0");
    long cap = degree_cap > 0 ? degree_cap : default_degree_cap(ring.curve(), steps);
    try {
        return resolve_impl<long long>(ring, steps, cap, slack);
    } catch (const int_overflow&) {
        return resolve_impl<ZZ>(ring, steps, cap, slack);
    }
}

Resolution resolve_k(const CurveData& curve, int steps, long degree_cap, int slack) {
    QuotientRing ring(curve);
    return resolve_k(ring, steps, degree_cap, slack);
}

Resolution resolve_k_bigint(const QuotientRing& ring, int steps, long degree_cap, int slack) {
    if (steps < 1) throw parameter_error("resolve_k_bigint: steps must be >= 1");
    if (slack < 0) throw parameter_error("resolve_k_bigint: slack must be >= 0");
    long cap = degree_cap > 0 ? degree_cap : default_degree_cap(ring.curve(), steps);
    return resolve_impl<ZZ>(ring, steps, cap, slack);
}

BettiTable betti_from_resolution(const Resolution& res) {
    BettiTable t;
    t.set(0, 0, 1);
    for (std::size_t i = 0; i < res.steps.size(); ++i)
        for (long tw : res.steps[i].source_twists) t.add(static_cast<int>(i) + 1, tw, 1);
    return t;
}

ResolutionCheck verify_resolution(const QuotientRing& ring, const Resolution& res) {
    ResolutionCheck out;
    out.differentials_compose_to_zero = true;
    out.minimal = true;
    out.graded = true;

    std::vector<long> prev{0};
    for (std::size_t i = 0; i < res.steps.size(); ++i) {
        const auto& s = res.steps[i];
        for (std::size_t r = 0; r < s.entries.size(); ++r) {
            for (std::size_t c = 0; c < s.source_twists.size(); ++c) {
                const Polynomial& p = s.entries[r][c];
                if (p.is_zero()) continue;
                long expected = s.source_twists[c] - prev[r];
                if (!p.is_weighted_homogeneous() || p.weighted_degree() != expected)
                    out.graded = false;
                if (expected <= 0) out.minimal = false;
            }
        }
        if (i + 1 < res.steps.size()) {
            const auto& nextstep = res.steps[i + 1];
            for (std::size_t r = 0; r < s.entries.size(); ++r)
                for (std::size_t c = 0; c < nextstep.source_twists.size(); ++c) {
                    Polynomial acc = Polynomial::zero(ring.ambient());
                    for (std::size_t m = 0; m < s.source_twists.size(); ++m)
                        acc = acc + s.entries[r][m] * nextstep.entries[m][c];
                    if (!ring.nf(acc).is_zero()) out.differentials_compose_to_zero = false;
                }
        }
        prev = s.source_twists;
    }
    return out;
}

} // namespace wrc
