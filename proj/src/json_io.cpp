#include "wrc/json_io.hpp"

#include <sstream>

namespace wrc {

json to_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [k, v] : t.entries()) entries.push_back({k.first, k.second, v});
    return json{{"entries", entries}};
}

BettiTable betti_from_json(const json& j) {
    BettiTable t;
    for (const auto& e : j.at("entries"))
        t.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long long>());
    return t;
}

json to_json(const RationalSeries& s, int order) {
    json coeffs = json::array();
    BiPoly x = s.expand(order);
    for (const auto& [k, v] : x.coeffs())
        coeffs.push_back({k.first, k.second, to_string(v)});
    return json{{"numerator", s.numerator().to_string()},
                {"denominator_factors",
                 [&] {
                     json fs = json::array();
                     for (const auto& [f, m] : s.denominator_factors())
                         fs.push_back({{"factor", f.to_string()}, {"multiplicity", m}});
                     return fs;
                 }()},
                {"order", order},
                {"coefficients", coeffs}};
}

BiPoly series_coefficients_from_json(const json& j) {
    BiPoly p;
    for (const auto& e : j.at("coefficients"))
        p = p + BiPoly::term(e.at(0).get<int>(), e.at(1).get<int>(),
                             qq_from_string(e.at(2).get<std::string>()));
    return p;
}

json to_json(const CurveData& c) {
    json vars = json::array();
    for (std::size_t i = 0; i < c.ambient->size(); ++i)
        vars.push_back({{"name", c.ambient->name(i)}, {"weight", c.ambient->weight(i)}});
    json phi = json::array();
    for (std::size_t i = 0; i < c.phi.size(); ++i) {
        std::ostringstream os;
        if (c.phi[i].s_exp > 0) {
            os << "s";
            if (c.phi[i].s_exp > 1) os << "^" << c.phi[i].s_exp;
        }
        if (c.phi[i].t_exp > 0) {
            if (c.phi[i].s_exp > 0) os << "*";
            os << "t";
            if (c.phi[i].t_exp > 1) os << "^" << c.phi[i].t_exp;
        }
        if (os.str().empty()) os << "1";
        phi.push_back({{"variable", c.ambient->name(i)}, {"image", os.str()}});
    }
    return json{{"d", c.d}, {"e", c.e}, {"variables", vars}, {"phi", phi}};
}

json to_json(const std::vector<LatticePoint>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back({{"i", p.i}, {"j", p.j}, {"in_semigroup", p.member}});
    return a;
}

std::vector<LatticePoint> lattice_from_json(const json& j) {
    std::vector<LatticePoint> out;
    for (const auto& e : j)
        out.push_back({e.at("i").get<long>(), e.at("j").get<long>(),
                       e.at("in_semigroup").get<bool>()});
    return out;
}

std::string lattice_to_csv(const std::vector<LatticePoint>& pts) {
    std::ostringstream os;
    os << "i,j,member\n";
    for (const auto& p : pts) os << p.i << "," << p.j << "," << (p.member ? 1 : 0) << "\n";
    return os.str();
}

std::vector<LatticePoint> lattice_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<LatticePoint> out;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {
            if (line != "i,j,member") throw parse_error("lattice CSV: bad header");
            header = false;
            continue;
        }
        LatticePoint p;
        char c1, c2;
        std::istringstream ls(line);
        int member = 0;
        if (!(ls >> p.i >> c1 >> p.j >> c2 >> member) || c1 != ',' || c2 != ',')
            throw parse_error("lattice CSV: bad row: " + line);
        p.member = member != 0;
        out.push_back(p);
    }
    return out;
}

json to_json(const Resolution& res) {
    json steps = json::array();
    for (const auto& s : res.steps) {
        json entries = json::array();
        for (const auto& row : s.entries) {
            json r = json::array();
            for (const auto& p : row) r.push_back(to_string(p));
            entries.push_back(r);
        }
        steps.push_back({{"twists", s.source_twists}, {"entries", entries}});
    }
    return json{{"d", res.d},
                {"e", res.e},
                {"steps_requested", res.steps_requested},
                {"degree_cap", res.degree_cap},
                {"complete", res.complete},
                {"steps", steps}};
}

Resolution resolution_from_json(const json& j, VarSetPtr ambient) {
    Resolution res;
    res.d = j.at("d").get<int>();
    res.e = j.at("e").get<int>();
    res.steps_requested = j.at("steps_requested").get<int>();
    res.degree_cap = j.at("degree_cap").get<long>();
    res.complete = j.at("complete").get<bool>();
    for (const auto& js : j.at("steps")) {
        ResolutionStep s;
        s.source_twists = js.at("twists").get<std::vector<long>>();
        for (const auto& row : js.at("entries")) {
            std::vector<Polynomial> r;
            for (const auto& cell : row)
                r.push_back(parse_polynomial(cell.get<std::string>(), ambient));
            s.entries.push_back(std::move(r));
        }
        res.steps.push_back(std::move(s));
    }
    return res;
}

json to_json(const IdealBasis& basis) {
    json gens = json::array();
    for (const auto& g : basis.gens) gens.push_back(to_string(g, &basis.order));
    return json{{"generators", gens}, {"is_groebner", basis.is_groebner}};
}

} // namespace wrc
