#include "wrc/series.hpp"

#include <sstream>

#include "wrc/errors.hpp"

namespace wrc {

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::term(int zdeg, int wdeg, const QQ& c) {
    BiPoly p;
    p.insert(zdeg, wdeg, c);
    return p;
}

void BiPoly::insert(int zdeg, int wdeg, const QQ& c) {
    if (c == 0) return;
    auto [it, fresh] = c_.try_emplace({zdeg, wdeg}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

QQ BiPoly::coeff(int zdeg, int wdeg) const {
    auto it = c_.find({zdeg, wdeg});
    return it == c_.end() ? QQ(0) : it->second;
}

BiPoly BiPoly::coeff_z(int zdeg) const {
    BiPoly out;
    for (const auto& [k, v] : c_)
        if (k.first == zdeg) out.insert(0, k.second, v);
    return out;
}

int BiPoly::max_zdeg() const {
    int m = -1;
    for (const auto& [k, v] : c_) m = std::max(m, k.first);
    return m;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [k, v] : o.c_) out.insert(k.first, k.second, v);
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& [k, v] : out.c_) v = -v;
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out;
    for (const auto& [ka, va] : c_)
        for (const auto& [kb, vb] : o.c_)
            out.insert(ka.first + kb.first, ka.second + kb.second, va * vb);
    return out;
}

BiPoly BiPoly::scaled(const QQ& c) const {
    BiPoly out;
    if (c == 0) return out;
    for (const auto& [k, v] : c_) out.insert(k.first, k.second, v * c);
    return out;
}

BiPoly BiPoly::pow(int n) const {
    if (n < 0) throw parameter_error("BiPoly::pow: negative exponent");
    BiPoly out = BiPoly::one();
    BiPoly base = *this;
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

BiPoly BiPoly::truncate_z(int n) const {
    BiPoly out;
    for (const auto& [k, v] : c_)
        if (k.first <= n) out.insert(k.first, k.second, v);
    return out;
}

BiPoly BiPoly::eval_w_one() const {
    BiPoly out;
    for (const auto& [k, v] : c_) out.insert(k.first, 0, v);
    return out;
}

BiPoly BiPoly::eval_z_one_then_w_as_z() const {
    BiPoly out;
    for (const auto& [k, v] : c_) out.insert(k.second, 0, v);
    return out;
}

BiPoly BiPoly::negate_z() const {
    BiPoly out;
    for (const auto& [k, v] : c_) out.insert(k.first, k.second, k.first % 2 ? -v : v);
    return out;
}

std::string BiPoly::to_string(const std::string& zname, const std::string& wname) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        QQ c = v;
        bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? "-" : "+"));
        first = false;
        std::string mono;
        auto app = [&](const std::string& n, int d) {
            if (d == 0) return;
            if (!mono.empty()) mono += "*";
            mono += n;
            if (d != 1) mono += "^" + std::to_string(d);
        };
        app(zname, k.first);
        app(wname, k.second);
        if (mono.empty()) {
            os << wrc::to_string(c);
        } else {
            if (c != 1) os << wrc::to_string(c) << "*";
            os << mono;
        }
    }
    return os.str();
}

// --------------------------------------------------------- RationalSeries

RationalSeries::RationalSeries(BiPoly numerator, std::vector<std::pair<BiPoly, int>> den)
    : num_(std::move(numerator)), den_(std::move(den)) {
    for (const auto& [f, mult] : den_) {
        if (mult < 1) throw parameter_error("RationalSeries: factor multiplicity must be >= 1");
        if (f.constant_term() == 0)
            throw parameter_error("RationalSeries: denominator factor with zero constant term");
        for (const auto& [k, v] : f.coeffs())
            if (k.first == 0 && k.second != 0)
                throw parameter_error(
                    "RationalSeries: denominator factor has a z-free non-constant term");
    }
}

BiPoly RationalSeries::expand(int order) const {
    if (order < 0) throw parameter_error("RationalSeries::expand: negative order");
    BiPoly acc = num_.truncate_z(order);
    for (const auto& [f, mult] : den_) {
        QQ c = f.constant_term();
        // 1/f = (1/c) * sum_k g^k with g = 1 - f/c of positive z-valuation.
        BiPoly g = BiPoly::one() - f.scaled(QQ(1) / c);
        for (int m = 0; m < mult; ++m) {
            BiPoly inv = BiPoly::one();
            BiPoly p = BiPoly::one();
            for (int k = 1; k <= order; ++k) {
                p = (p * g).truncate_z(order);
                if (p.is_zero()) break;
                inv = inv + p;
            }
            acc = (acc * inv).truncate_z(order).scaled(QQ(1) / c);
        }
    }
    return acc;
}

QQ RationalSeries::coefficient(int zdeg, int wdeg) const { return expand(zdeg).coeff(zdeg, wdeg); }

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    std::vector<std::pair<BiPoly, int>> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return RationalSeries(num_ * o.num_, std::move(den));
}

RationalSeries RationalSeries::specialize_w_one() const {
    std::vector<std::pair<BiPoly, int>> den;
    for (const auto& [f, m] : den_) den.push_back({f.eval_w_one(), m});
    return RationalSeries(num_.eval_w_one(), std::move(den));
}

RationalSeries RationalSeries::specialize_z_one() const {
    std::vector<std::pair<BiPoly, int>> den;
    for (const auto& [f, m] : den_) den.push_back({f.eval_z_one_then_w_as_z(), m});
    return RationalSeries(num_.eval_z_one_then_w_as_z(), std::move(den));
}

RationalSeries RationalSeries::negate_z() const {
    std::vector<std::pair<BiPoly, int>> den;
    for (const auto& [f, m] : den_) den.push_back({f.negate_z(), m});
    return RationalSeries(num_.negate_z(), std::move(den));
}

std::string RationalSeries::to_string(const std::string& zname, const std::string& wname) const {
    std::ostringstream os;
    os << "(" << num_.to_string(zname, wname) << ")";
    if (!den_.empty()) {
        os << " / (";
        bool first = true;
        for (const auto& [f, m] : den_) {
            if (!first) os << "*";
            first = false;
            os << "(" << f.to_string(zname, wname) << ")";
            if (m != 1) os << "^" << m;
        }
        os << ")";
    }
    return os.str();
}

bool RationalSeries::series_equal(const RationalSeries& a, const RationalSeries& b, int order) {
    return a.expand(order) == b.expand(order);
}

BiPoly one_minus(int zdeg, int wdeg) {
    return BiPoly::one() - BiPoly::term(zdeg, wdeg, QQ(1));
}

} // namespace wrc
