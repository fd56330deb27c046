// wrc: weighted rational curve toolkit command line.
//
// Exit codes: 0 success, 1 verification failure, 2 parameter error,
// 3 resource budget or degree cap exhausted.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "wrc/json_io.hpp"
#include "wrc/resolution.hpp"

using namespace wrc;

namespace {

struct RunConfig {
    int d = 0, e = 0;
    int d_max = 0, e_max = 0;
    int order = 25;
    int steps = 3;
    long degree_cap = 0;
    std::string format = "text";
    std::string out;
    unsigned long long seed = 20240817ull;
    std::size_t budget = 1'000'000;
    int cases = 1000;
    bool check = false;
    std::string variant = "M";
    int gb_cap = 9;      // skip Groebner-backed checks above this d+e
    int series_cap = 12; // skip series checks above this d+e
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw parameter_error("cannot open output file: " + cfg.out);
    f << text;
}

void validate_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (cfg.format == a) return;
    throw parameter_error("unsupported format '" + cfg.format + "' for this command");
}

CurveData curve_of(const RunConfig& cfg) { return build_curve(cfg.d, cfg.e); }

// ------------------------------------------------------------------ curve

int cmd_curve(const RunConfig& cfg) {
    validate_format(cfg, {"text", "json"});
    CurveData c = curve_of(cfg);
    if (cfg.format == "json") {
        emit(cfg, to_json(c).dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "weighted rational curve of type (" << c.d << ", " << c.e << ")\n";
    os << "ambient: ";
    for (std::size_t i = 0; i < c.ambient->size(); ++i) {
        if (i) os << ", ";
        os << c.ambient->name(i) << " (deg " << c.ambient->weight(i) << ")";
    }
    os << "\nmap: [s:t] -> [";
    json phi = to_json(c)["phi"];
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (i) os << ":";
        os << phi[i]["image"].get<std::string>();
    }
    os << "]\n";
    emit(cfg, os.str());
    return 0;
}

// --------------------------------------------------------------------- gb

MatrixVariant variant_of(const RunConfig& cfg) {
    if (cfg.variant == "M") return MatrixVariant::M;
    if (cfg.variant == "M0") return MatrixVariant::M0;
    throw parameter_error("variant must be M or M0");
}

int cmd_gb(const RunConfig& cfg) {
    validate_format(cfg, {"text", "json"});
    CurveData c = curve_of(cfg);
    BuchbergerOptions opts;
    opts.pair_budget = cfg.budget;
    IdealBasis basis = minor_basis(c, variant_of(cfg));
    IdealBasis gb = buchberger(basis, opts);
    MonomialIdeal J = initial_ideal(gb);

    if (cfg.format == "json") {
        json j = to_json(gb);
        json init = json::array();
        for (const auto& m : J.min_gens()) init.push_back(to_string(m, *c.ambient));
        j["initial_ideal"] = init;
        if (cfg.check) j["minors_are_groebner"] = is_groebner_basis(basis).ok;
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    if (cfg.check) {
        bool ok = is_groebner_basis(basis).ok;
        os << "GROEBNER: " << (ok ? "true" : "false") << ", " << basis.gens.size()
           << " generators, initial ideal: " << J.min_gens().size() << " monomials\n";
    }
    for (const auto& g : gb.gens) os << to_string(g, &gb.order) << "\n";
    emit(cfg, os.str());
    return 0;
}

// ---------------------------------------------------------------- hilbert

int cmd_hilbert(const RunConfig& cfg) {
    validate_format(cfg, {"text", "json"});
    RationalSeries r = hilbert_series_R(cfg.d, cfg.e);
    RationalSeries en = hilbert_series_EN(cfg.d, cfg.e);
    if (cfg.format == "json") {
        json j{{"reduced", to_json(r, cfg.order)}, {"resolution_form", to_json(en, cfg.order)}};
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "HS_R(z)   = " << r.to_string() << "\n";
    os << "HS_R(z)   = " << en.to_string() << "  [resolution form]\n";
    os << "h_R(a)    =";
    for (int a = 0; a <= cfg.order; ++a) os << " " << hilbert_function_R(cfg.d, cfg.e, a);
    os << "\n";
    emit(cfg, os.str());
    return 0;
}

// ------------------------------------------------------------------ betti

int cmd_betti(const RunConfig& cfg) {
    validate_format(cfg, {"text", "json"});
    BettiTable t = betti_table_EN(cfg.d, cfg.e);
    if (cfg.format == "json")
        emit(cfg, to_json(t).dump(2) + "\n");
    else
        emit(cfg, t.render_m2());
    return 0;
}

// --------------------------------------------------------------------- gr

int cmd_gr(const RunConfig& cfg) {
    validate_format(cfg, {"text", "json"});
    RationalSeries big = hilbert_series_gr(cfg.d, cfg.e, true);
    RationalSeries uni = hilbert_series_gr(cfg.d, cfg.e, false);
    if (cfg.format == "json") {
        json j{{"bigraded", to_json(big, cfg.order)}, {"single", to_json(uni, cfg.order)}};
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "HS_gr(z,w) = " << big.to_string() << "\n";
    os << "HS_gr(z)   = " << uni.to_string() << "\n";
    emit(cfg, os.str());
    return 0;
}

// --------------------------------------------------------------- poincare

int cmd_poincare(const RunConfig& cfg) {
    validate_format(cfg, {"text", "json"});
    RationalSeries graded = poincare_series(cfg.d, cfg.e, true);
    RationalSeries ungraded = poincare_series(cfg.d, cfg.e, false);
    if (cfg.format == "json") {
        json j{{"graded", to_json(graded, cfg.order)}, {"ungraded", to_json(ungraded, cfg.order)}};
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "Poin(z,w) = " << graded.to_string() << "\n";
    os << "Poin(z)   = " << ungraded.to_string() << "\n";
    os << "beta_i    =";
    BiPoly x = ungraded.expand(cfg.order);
    for (int i = 0; i <= cfg.order; ++i) os << " " << to_string(x.coeff(i, 0));
    os << "\n";
    emit(cfg, os.str());
    return 0;
}

// ---------------------------------------------------------------- resolve

int cmd_resolve(const RunConfig& cfg) {
    validate_format(cfg, {"text", "json"});
    QuotientRing ring(curve_of(cfg));
    Resolution res = resolve_k(ring, cfg.steps, cfg.degree_cap);
    if (cfg.format == "json") {
        emit(cfg, to_json(res).dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "resolution of k over R, " << cfg.steps << " steps\n";
    for (std::size_t i = 0; i < res.steps.size(); ++i) {
        os << "F_" << (i + 1) << ": rank " << res.steps[i].source_twists.size() << ", twists";
        for (long t : res.steps[i].source_twists) os << " -" << t;
        os << "\n";
    }
    os << betti_from_resolution(res).render_m2();
    emit(cfg, os.str());
    return 0;
}

// ---------------------------------------------------------------- lattice

int cmd_lattice(const RunConfig& cfg) {
    validate_format(cfg, {"csv", "json", "text"});
    CurveData c = curve_of(cfg);
    int cap = cfg.degree_cap > 0 ? static_cast<int>(cfg.degree_cap) : 4;
    auto grid = lattice_point_grid(c, cap);
    if (cfg.format == "json")
        emit(cfg, to_json(grid).dump(2) + "\n");
    else
        emit(cfg, lattice_to_csv(grid));
    return 0;
}

// ----------------------------------------------------------------- verify

struct CheckResult {
    std::string name;
    std::string status; // PASS / FAIL / SKIP
    std::string detail;
};

std::vector<CheckResult> verify_cell(int d, int e, int order, std::size_t budget, int gb_cap,
                                     int series_cap) {
    std::vector<CheckResult> out;
    auto push = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok ? "PASS" : "FAIL", detail});
    };
    auto skip = [&](const std::string& name, const std::string& why) {
        out.push_back({name, "SKIP", why});
    };

    BuchbergerOptions opts;
    opts.pair_budget = budget;
    CurveData c = build_curve(d, e);
    const bool gb_ok = d + e <= gb_cap;
    const bool series_ok = d + e <= series_cap;

    try {
        if (gb_ok) {
            IdealBasis minors = minor_basis(c, MatrixVariant::M);
            IdealBasis oracle = toric_kernel(phi_images(c), c.ambient, order_w(c), opts);
            push("determinantal", ideal_equal(minors, oracle, opts));

            GroebnerCertificate cert = is_groebner_basis(minors);
            push("groebner", cert.ok);

            IdealBasis gb = buchberger(minors, opts);
            MonomialIdeal J = initial_ideal(gb);
            std::vector<Monomial> leads;
            for (const auto& g : minors.gens) leads.push_back(leading_monomial(g, minors.order));
            push("initial_ideal", J == MonomialIdeal::from_generators(leads));

            bool counts = true;
            for (long a = 0; a <= 15 && counts; ++a)
                counts = standard_monomial_count(J, a, *c.ambient) == hilbert_function_R(d, e, a);
            push("standard_monomials", counts);

            IdealBasis m0 = minor_basis(c, MatrixVariant::M0);
            bool gr_ok = is_groebner_basis(m0).ok;
            MonomialIdeal J0 = initial_ideal(buchberger(m0, opts));
            gr_ok = gr_ok && (J0 == J);
            BiPoly grx = hilbert_series_gr(d, e, false).expand(15);
            auto flat = c.ambient->unweighted();
            for (long a = 0; a <= 15 && gr_ok; ++a)
                gr_ok = QQ(static_cast<long>(standard_monomial_count(J0, a, *flat))) ==
                        grx.coeff(static_cast<int>(a), 0);
            push("associated_graded", gr_ok);
        } else {
            for (const char* n : {"determinantal", "groebner", "initial_ideal",
                                  "standard_monomials", "associated_graded"})
                skip(n, "d+e above the groebner cap");
        }
    } catch (const budget_exceeded& ex) {
        for (const char* n : {"determinantal", "groebner", "initial_ideal", "standard_monomials",
                              "associated_graded"}) {
            bool present = false;
            for (auto& r : out)
                if (r.name == n) present = true;
            if (!present) skip(n, ex.what());
        }
    }

    if (series_ok) {
        bool hseq = RationalSeries::series_equal(hilbert_series_EN(d, e), hilbert_series_R(d, e),
                                                 order);
        BiPoly x = hilbert_series_R(d, e).expand(order);
        for (int a = 0; a <= order && hseq; ++a)
            hseq = x.coeff(a, 0) == QQ(static_cast<long>(hilbert_function_R(d, e, a)));
        push("hilbert_series", hseq);

        CmReport cm = cm_check(d, e);
        push("cohen_macaulay", cm.cohen_macaulay && cm.codim == d + e - 2);

        bool poin = RationalSeries::series_equal(
            poincare_series(d, e, true) * hilbert_series_gr(d, e, true).negate_z(),
            RationalSeries::polynomial(BiPoly::one()), order >= 20 ? 20 : order);
        poin = poin && RationalSeries::series_equal(poincare_series(d, e, true).specialize_w_one(),
                                                    poincare_series(d, e, false), 15);
        if (e >= 2) {
            BiPoly px = poincare_series(d, e, true).expand(6);
            for (int i = 0; i <= 6 && poin; ++i) {
                StrandBettis s = strand_bettis(d, e, i);
                poin = px.coeff(i, i) == QQ(static_cast<long>(s.linear)) &&
                       px.coeff(i, e * i) == QQ(static_cast<long>(s.twisted));
            }
        }
        push("poincare", poin);

        push("golod", golod_check(d, e, 10).ok());
    } else {
        for (const char* n : {"hilbert_series", "cohen_macaulay", "poincare", "golod"})
            skip(n, "d+e above the series cap");
    }

    SemigroupLambda sg = semigroup(c);
    bool sgo = semigroup_member(sg, 0, static_cast<long>(d) * e);
    if (e >= 2) sgo = sgo && !semigroup_member(sg, 0, d);
    push("semigroup", sgo);

    return out;
}

int cmd_verify(const RunConfig& cfg) {
    validate_format(cfg, {"text", "json"});
    std::vector<std::pair<int, int>> cells;
    if (cfg.d > 0 || cfg.e > 0) {
        if (cfg.d < 1 || cfg.e < 1) throw parameter_error("verify: need d >= 1 and e >= 1");
        cells.push_back({cfg.d, cfg.e});
    } else {
        int dmax = cfg.d_max > 0 ? cfg.d_max : 4;
        int emax = cfg.e_max > 0 ? cfg.e_max : 3;
        for (int d = 1; d <= dmax; ++d)
            for (int e = 1; e <= emax; ++e) cells.push_back({d, e});
    }

    std::vector<std::vector<CheckResult>> results(cells.size());

    // independent cells; run them on a small pool, report in order
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            results[i] = verify_cell(cells[i].first, cells[i].second, cfg.order, cfg.budget,
                                     cfg.gb_cap, cfg.series_cap);
        }
    };
    unsigned n = std::min<unsigned>(std::thread::hardware_concurrency(),
                                    static_cast<unsigned>(cells.size()));
    if (n == 0) n = 1;
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool any_fail = false;
    std::ostringstream os;
    json summary = json::array();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        json checks = json::array();
        for (const auto& r : results[i]) {
            os << "(" << cells[i].first << "," << cells[i].second << ") " << r.status << " "
               << r.name;
            if (!r.detail.empty()) os << "  [" << r.detail << "]";
            os << "\n";
            if (r.status == "FAIL") any_fail = true;
            checks.push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
        }
        summary.push_back({{"d", cells[i].first}, {"e", cells[i].second}, {"checks", checks}});
    }
    json full{{"cells", summary}, {"all_pass", !any_fail}};
    if (cfg.format == "json")
        emit(cfg, full.dump(2) + "\n");
    else {
        os << (any_fail ? "RESULT: FAIL\n" : "RESULT: PASS\n");
        emit(cfg, os.str());
    }
    return any_fail ? 1 : 0;
}

// --------------------------------------------------------------- selftest

int cmd_selftest(const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    CurveData c = build_curve(3, 2);
    TermOrder ord = order_w(c);
    std::vector<Polynomial> minors = minor_polys(curve_matrix(c, MatrixVariant::M));
    const std::size_t n = c.ambient->size();

    auto random_monomial = [&](int maxe) {
        std::uniform_int_distribution<int> dist(0, maxe);
        std::vector<int> e(n);
        for (auto& x : e) x = dist(rng);
        return Monomial(e);
    };
    auto random_poly = [&]() {
        std::uniform_int_distribution<int> nt(0, 6), co(-9, 9);
        std::vector<Term> ts;
        for (int i = 0, m = nt(rng); i < m; ++i) ts.push_back({random_monomial(4), QQ(co(rng))});
        return Polynomial::from_terms(c.ambient, std::move(ts));
    };

    long failures = 0;
    Monomial one = Monomial::one(n);
    for (int i = 0; i < cfg.cases; ++i) {
        Monomial a = random_monomial(4), b = random_monomial(4), m = random_monomial(3);
        Ordering ab = ord.compare(a, b);
        if ((ab == Ordering::EQ) != (a == b)) ++failures;
        if (ord.compare(a * m, b * m) != ab) ++failures;
        if (!(a == one) && ord.compare(a, one) != Ordering::GT) ++failures;
    }
    for (int i = 0; i < cfg.cases; ++i) {
        Polynomial f = random_poly();
        Polynomial r = normal_form(f, minors, ord);
        if (!(normal_form(r, minors, ord) == r)) ++failures;
    }
    std::ostringstream os;
    os << "selftest: " << 2 * cfg.cases << " cases, seed " << cfg.seed << ", failures "
       << failures << "\n";
    emit(cfg, os.str());
    return failures == 0 ? 0 : 1;
}

void add_de(CLI::App* app, RunConfig& cfg, bool required = true) {
    auto* d = app->add_option("--d", cfg.d, "number of degree-1 coordinates");
    auto* e = app->add_option("--e", cfg.e, "number of degree-e coordinates");
    if (required) {
        d->required();
        e->required();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted rational curve toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* c_curve = app.add_subcommand("curve", "print the curve data");
    add_de(c_curve, cfg);
    c_curve->add_option("--format", cfg.format);
    c_curve->add_option("--out", cfg.out);

    auto* c_gb = app.add_subcommand("gb", "Groebner basis of the defining minors");
    add_de(c_gb, cfg);
    c_gb->add_option("--variant", cfg.variant, "M or M0");
    c_gb->add_flag("--check", cfg.check, "verify the minors are already a basis");
    c_gb->add_option("--budget", cfg.budget);
    c_gb->add_option("--format", cfg.format);
    c_gb->add_option("--out", cfg.out);

    auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert function and series");
    add_de(c_hilbert, cfg);
    c_hilbert->add_option("--order", cfg.order);
    c_hilbert->add_option("--format", cfg.format);
    c_hilbert->add_option("--out", cfg.out);

    auto* c_betti = app.add_subcommand("betti", "Betti table of R over S");
    add_de(c_betti, cfg);
    c_betti->add_option("--format", cfg.format);
    c_betti->add_option("--out", cfg.out);

    auto* c_gr = app.add_subcommand("gr", "associated graded Hilbert series");
    add_de(c_gr, cfg);
    c_gr->add_option("--order", cfg.order);
    c_gr->add_option("--format", cfg.format);
    c_gr->add_option("--out", cfg.out);

    auto* c_poin = app.add_subcommand("poincare", "Poincare series of k over R");
    add_de(c_poin, cfg);
    c_poin->add_option("--order", cfg.order);
    c_poin->add_option("--format", cfg.format);
    c_poin->add_option("--out", cfg.out);

    auto* c_res = app.add_subcommand("resolve", "resolution of k over R");
    add_de(c_res, cfg);
    c_res->add_option("--steps", cfg.steps);
    c_res->add_option("--degree-cap", cfg.degree_cap);
    c_res->add_option("--format", cfg.format);
    c_res->add_option("--out", cfg.out);

    auto* c_lat = app.add_subcommand("lattice", "semigroup lattice points");
    add_de(c_lat, cfg);
    c_lat->add_option("--degree-cap", cfg.degree_cap, "max weighted degree (default 4)");
    c_lat->add_option("--format", cfg.format)->default_str("csv");
    c_lat->add_option("--out", cfg.out);

    auto* c_ver = app.add_subcommand("verify", "machine-check the toolkit claims on a grid");
    add_de(c_ver, cfg, false);
    c_ver->add_option("--d-max", cfg.d_max);
    c_ver->add_option("--e-max", cfg.e_max);
    c_ver->add_option("--order", cfg.order);
    c_ver->add_option("--budget", cfg.budget);
    c_ver->add_option("--gb-cap", cfg.gb_cap, "skip Groebner-backed checks above this d+e");
    c_ver->add_option("--series-cap", cfg.series_cap, "skip series checks above this d+e");
    c_ver->add_option("--format", cfg.format);
    c_ver->add_option("--out", cfg.out);

    auto* c_self = app.add_subcommand("selftest", "seeded randomized property suites");
    c_self->add_option("--seed", cfg.seed);
    c_self->add_option("--cases", cfg.cases);
    c_self->add_option("--out", cfg.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_curve)) return cmd_curve(cfg);
        if (app.got_subcommand(c_gb)) return cmd_gb(cfg);
        if (app.got_subcommand(c_hilbert)) return cmd_hilbert(cfg);
        if (app.got_subcommand(c_betti)) return cmd_betti(cfg);
        if (app.got_subcommand(c_gr)) return cmd_gr(cfg);
        if (app.got_subcommand(c_poin)) return cmd_poincare(cfg);
        if (app.got_subcommand(c_res)) return cmd_resolve(cfg);
        if (app.got_subcommand(c_lat)) return cmd_lattice(cfg);
        if (app.got_subcommand(c_ver)) return cmd_verify(cfg);
        if (app.got_subcommand(c_self)) return cmd_selftest(cfg);
    } catch (const parameter_error& ex) {
        std::cerr << "parameter error: " << ex.what() << "\n";
        return 2;
    } catch (const budget_exceeded& ex) {
        std::cerr << "budget exhausted: " << ex.what() << "\n";
        return 3;
    } catch (const incomplete_resolution& ex) {
        std::cerr << "degree cap exhausted: " << ex.what() << "\n";
        return 3;
    } catch (const error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
