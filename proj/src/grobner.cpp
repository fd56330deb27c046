#include "wrc/grobner.hpp"

#include <algorithm>
#include <map>

namespace wrc {

// ---------------------------------------------------------- MonomialIdeal

MonomialIdeal MonomialIdeal::from_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> min;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) min.push_back(gens[i]);
    }
    MonomialIdeal J;
    J.gens_ = std::move(min);
    return J;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

// ----------------------------------------------------------- S-polynomial

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    if (!f.ambient().same_as(g.ambient()))
        throw ambient_mismatch("s_polynomial: mixed variable sets");
    Term lf = leading_term(f, ord);
    Term lg = leading_term(g, ord);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Polynomial a = f.times_term(l.quotient_by(lf.mono), QQ(1) / lf.coeff);
    Polynomial b = g.times_term(l.quotient_by(lg.mono), QQ(1) / lg.coeff);
    return a - b;
}

// -------------------------------------------------------------- Buchberger

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    long degree; // total degree of the lcm, selection key
};

// Normal selection: smallest lcm degree first, then structural order for
// determinism.
bool pair_before(const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (!(a.lcm == b.lcm)) return a.lcm < b.lcm;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
}

} // namespace

IdealBasis buchberger(const IdealBasis& basis, const BuchbergerOptions& opts) {
    const TermOrder& ord = basis.order;
    for (const auto& g : basis.gens) {
        if (g.is_zero()) throw zero_polynomial_error("buchberger: zero generator");
        if (!g.ambient().same_as(*basis.ambient))
            throw ambient_mismatch("buchberger: generator over wrong variable set");
    }

    std::vector<Polynomial> G;
    std::vector<Monomial> lead;
    std::vector<Pair> pairs;

    auto push_gen = [&](const Polynomial& f) {
        Monomial lm = leading_monomial(f, ord);
        std::size_t n = G.size();
        for (std::size_t i = 0; i < n; ++i) {
            // Buchberger's first criterion: coprime leads never produce work.
            if (lead[i].coprime_with(lm)) continue;
            Monomial l = Monomial::lcm(lead[i], lm);
            long deg = l.total_degree();
            pairs.push_back({i, n, std::move(l), deg});
        }
        if (pairs.size() > opts.pair_budget)
            throw budget_exceeded("buchberger: pair queue exceeded budget of " +
                                  std::to_string(opts.pair_budget));
        G.push_back(f);
        lead.push_back(std::move(lm));
    };

    for (const auto& g : basis.gens) push_gen(g);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_before);
        Pair p = *it;
        pairs.erase(it);
        Polynomial r = normal_form(s_polynomial(G[p.i], G[p.j], ord), G, ord);
        if (!r.is_zero()) push_gen(r);
    }

    // Minimalize: drop generators whose lead is divisible by another kept
    // lead; among equal leads the first one wins.
    std::vector<Polynomial> min_gens;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lead[i] == lead[j] ? j < i : lead[j].divides(lead[i])) redundant = true;
        }
        if (!redundant) min_gens.push_back(G[i]);
    }

    // Reduce: tails brought to normal form against the rest, monic leads.
    std::vector<Polynomial> reduced = min_gens;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        Term lt = leading_term(min_gens[i], ord);
        Polynomial tail = min_gens[i] - Polynomial::term(min_gens[i].ambient_ptr(), lt.mono, lt.coeff);
        Polynomial nf_tail = others.empty() ? tail : normal_form(tail, others, ord);
        Polynomial g = Polynomial::term(min_gens[i].ambient_ptr(), lt.mono, lt.coeff) + nf_tail;
        reduced[i] = g.scaled(QQ(1) / lt.coeff);
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(leading_monomial(a, ord), leading_monomial(b, ord)) == Ordering::LT;
    });

    IdealBasis out{std::move(reduced), basis.ambient, basis.order, true};
    return out;
}

GroebnerCertificate is_groebner_basis(const IdealBasis& basis) {
    const TermOrder& ord = basis.order;
    GroebnerCertificate cert;
    cert.ok = true;
    for (std::size_t i = 0; i < basis.gens.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.gens.size(); ++j) {
            Monomial li = leading_monomial(basis.gens[i], ord);
            Monomial lj = leading_monomial(basis.gens[j], ord);
            if (li.coprime_with(lj)) continue;
            Polynomial r = normal_form(s_polynomial(basis.gens[i], basis.gens[j], ord),
                                       basis.gens, ord);
            if (!r.is_zero()) {
                cert.ok = false;
                cert.failures.push_back({i, j, std::move(r)});
            }
        }
    }
    return cert;
}

IdealBasis verified(const IdealBasis& basis) {
    if (!is_groebner_basis(basis).ok)
        throw precondition_error("verified: basis is not a Groebner basis");
    IdealBasis out = basis;
    out.is_groebner = true;
    return out;
}

MonomialIdeal initial_ideal(const IdealBasis& basis) {
    if (!basis.is_groebner)
        throw precondition_error("initial_ideal: basis has not been verified");
    std::vector<Monomial> leads;
    leads.reserve(basis.gens.size());
    for (const auto& g : basis.gens) leads.push_back(leading_monomial(g, basis.order));
    return MonomialIdeal::from_generators(std::move(leads));
}

// --------------------------------------------------- standard monomials

namespace {

bool divisible_by_some(const std::vector<int>& e, const std::vector<Monomial>& gens) {
    for (const auto& g : gens) {
        bool div = true;
        const auto& ge = g.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (ge[i] > e[i]) {
                div = false;
                break;
            }
        }
        if (div) return true;
    }
    return false;
}

template <class F>
void enumerate_weighted(const VarSet& vars, long degree, std::size_t i, std::vector<int>& e,
                        const F& visit) {
    if (i == vars.size()) {
        if (degree == 0) visit(e);
        return;
    }
    long w = vars.weight(i);
    for (long k = 0; k * w <= degree; ++k) {
        e[i] = static_cast<int>(k);
        enumerate_weighted(vars, degree - k * w, i + 1, e, visit);
    }
    e[i] = 0;
}

} // namespace

std::vector<Monomial> standard_monomials(const MonomialIdeal& J, long degree, const VarSet& vars) {
    if (degree < 0) throw parameter_error("standard_monomials: negative degree");
    std::vector<Monomial> out;
    std::vector<int> e(vars.size(), 0);
    enumerate_weighted(vars, degree, 0, e, [&](const std::vector<int>& exps) {
        if (!divisible_by_some(exps, J.min_gens())) out.emplace_back(exps);
    });
    std::sort(out.begin(), out.end());
    return out;
}

long long standard_monomial_count(const MonomialIdeal& J, long degree, const VarSet& vars) {
    if (degree < 0) throw parameter_error("standard_monomial_count: negative degree");
    long long n = 0;
    std::vector<int> e(vars.size(), 0);
    enumerate_weighted(vars, degree, 0, e, [&](const std::vector<int>& exps) {
        if (!divisible_by_some(exps, J.min_gens())) ++n;
    });
    return n;
}

// ------------------------------------------------------------ toric kernel

IdealBasis toric_kernel(const std::vector<Polynomial>& images, VarSetPtr ambient,
                        const TermOrder& target_order, const BuchbergerOptions& opts) {
    if (images.size() != ambient->size())
        throw parameter_error("toric_kernel: one image per ambient variable required");
    if (images.empty()) throw parameter_error("toric_kernel: empty ambient");
    VarSetPtr param = images[0].ambient_ptr();
    if (param->size() != 2)
        throw parameter_error("toric_kernel: images must live in a two-parameter ring");
    for (const auto& im : images) {
        if (!im.ambient().same_as(*param))
            throw ambient_mismatch("toric_kernel: images over mixed parameter rings");
        if (im.term_count() != 1 || im.terms()[0].coeff != 1)
            throw parameter_error("toric_kernel: images must be monomials");
    }

    // Work ring k[s,t,x...]: parameter block first, then the ambient block.
    const std::size_t np = param->size(), na = ambient->size(), n = np + na;
    std::vector<std::string> names = param->names();
    std::vector<long> weights = param->weights();
    for (std::size_t i = 0; i < na; ++i) {
        names.push_back(ambient->name(i));
        weights.push_back(ambient->weight(i));
    }
    VarSetPtr work = VarSet::make(std::move(names), std::move(weights));

    // Elimination order: degree in the parameter block first, then the
    // target order's rows lifted to the work ring, then revlex.
    std::vector<std::vector<long>> rows;
    std::vector<long> block(n, 0);
    for (std::size_t i = 0; i < np; ++i) block[i] = 1;
    rows.push_back(block);
    for (const auto& row : target_order.weight_rows()) {
        std::vector<long> lifted(n, 0);
        for (std::size_t i = 0; i < na; ++i) lifted[np + i] = row[i];
        rows.push_back(lifted);
    }
    std::vector<long> tail_deg(n, 0);
    for (std::size_t i = 0; i < na; ++i) tail_deg[np + i] = 1;
    rows.push_back(tail_deg);
    std::vector<std::size_t> prec;
    for (std::size_t i = 0; i < np; ++i) prec.push_back(i);
    for (std::size_t i : target_order.precedence()) prec.push_back(np + i);
    TermOrder elim(work, std::move(rows), TieBreak::RevLex, std::move(prec));

    // Generators x_i - phi(x_i) in the work ring.
    auto lift_ambient_var = [&](std::size_t i) { return Monomial::var(n, np + i); };
    auto lift_param_mono = [&](const Monomial& m) {
        std::vector<int> e(n, 0);
        for (std::size_t i = 0; i < np; ++i) e[i] = m.exponent(i);
        return Monomial(std::move(e));
    };
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < na; ++i) {
        Polynomial g = Polynomial::term(work, lift_ambient_var(i), QQ(1)) -
                       Polynomial::term(work, lift_param_mono(images[i].terms()[0].mono), QQ(1));
        gens.push_back(std::move(g));
    }

    IdealBasis full = buchberger({std::move(gens), work, elim, false}, opts);

    // Intersect with the ambient block and re-verify under the target order.
    std::vector<Polynomial> kept;
    for (const auto& g : full.gens) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < np && pure; ++i)
                if (t.mono.exponent(i) != 0) pure = false;
        if (!pure) continue;
        std::vector<Term> restricted;
        for (const auto& t : g.terms()) {
            std::vector<int> e(na);
            for (std::size_t i = 0; i < na; ++i) e[i] = t.mono.exponent(np + i);
            restricted.push_back({Monomial(std::move(e)), t.coeff});
        }
        kept.push_back(Polynomial::from_terms(ambient, std::move(restricted)));
    }

    return buchberger({std::move(kept), ambient, target_order, false}, opts);
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b, const BuchbergerOptions& opts) {
    if (!a.ambient->same_as(*b.ambient))
        throw ambient_mismatch("ideal_equal: different variable sets");
    IdealBasis ga = a.is_groebner ? a : buchberger(a, opts);
    IdealBasis gb = b.is_groebner ? b : buchberger(b, opts);
    for (const auto& f : a.gens)
        if (!normal_form(f, gb.gens, gb.order).is_zero()) return false;
    for (const auto& f : b.gens)
        if (!normal_form(f, ga.gens, ga.order).is_zero()) return false;
    return true;
}

} // namespace wrc
