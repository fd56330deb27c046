#include "wrc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace wrc {

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(std::vector<std::string> names, std::vector<long> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
        throw parameter_error("VarSet: names/weights size mismatch");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw parameter_error("VarSet: duplicate name " + n);
    for (long w : weights_)
        if (w < 1) throw parameter_error("VarSet: weights must be >= 1");
}

VarSetPtr VarSet::make(std::vector<std::string> names, std::vector<long> weights) {
    return std::make_shared<const VarSet>(std::move(names), std::move(weights));
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool VarSet::same_as(const VarSet& other) const {
    return names_ == other.names_ && weights_ == other.weights_;
}

VarSetPtr VarSet::unweighted() const {
    return make(names_, std::vector<long>(names_.size(), 1));
}

static void require_same_ambient(const VarSet& a, const VarSet& b) {
    if (&a == &b) return;
    if (!a.same_as(b)) throw ambient_mismatch("operands live over different variable sets");
}

// -------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_)
        if (x < 0) throw parameter_error("Monomial: negative exponent");
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, int power) {
    if (i >= nvars) throw parameter_error("Monomial::var: index out of range");
    if (power < 0) throw parameter_error("Monomial::var: negative power");
    Monomial m(nvars);
    m.e_[i] = power;
    return m;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

long Monomial::total_degree() const {
    long s = 0;
    for (int x : e_) s += x;
    return s;
}

long Monomial::weighted_degree(const VarSet& vs) const {
    if (vs.size() != e_.size()) throw ambient_mismatch("weighted_degree: wrong variable count");
    long s = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) s += static_cast<long>(e_[i]) * vs.weight(i);
    return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw ambient_mismatch("monomial product: wrong variable count");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw ambient_mismatch("divides: wrong variable count");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
    if (!o.divides(*this)) throw error("quotient_by: not divisible");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.e_.size() != b.e_.size()) throw ambient_mismatch("lcm: wrong variable count");
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw ambient_mismatch("coprime_with: wrong variable count");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : m.exponents()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

// ------------------------------------------------------------- TermOrder

TermOrder::TermOrder(VarSetPtr ambient, std::vector<std::vector<long>> weight_rows,
                     TieBreak tie_break, std::vector<std::size_t> precedence)
    : ambient_(std::move(ambient)),
      weight_rows_(std::move(weight_rows)),
      tie_break_(tie_break),
      precedence_(std::move(precedence)) {
    const std::size_t n = ambient_->size();
    for (const auto& row : weight_rows_)
        if (row.size() != n) throw parameter_error("TermOrder: weight row has wrong length");
    if (precedence_.size() != n) throw parameter_error("TermOrder: precedence must list every variable");
    std::vector<bool> seen(n, false);
    for (std::size_t i : precedence_) {
        if (i >= n || seen[i]) throw parameter_error("TermOrder: precedence is not a permutation");
        seen[i] = true;
    }
}

TermOrder TermOrder::grevlex(VarSetPtr ambient) {
    const std::size_t n = ambient->size();
    std::vector<std::size_t> prec(n);
    for (std::size_t i = 0; i < n; ++i) prec[i] = i;
    return TermOrder(std::move(ambient), {std::vector<long>(n, 1)}, TieBreak::RevLex, prec);
}

Ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = ambient_->size();
    if (a.nvars() != n || b.nvars() != n)
        throw ambient_mismatch("TermOrder::compare: wrong variable count");
    for (const auto& row : weight_rows_) {
        long da = 0, db = 0;
        for (std::size_t i = 0; i < n; ++i) {
            da += row[i] * a.exponent(i);
            db += row[i] * b.exponent(i);
        }
        if (da != db) return da > db ? Ordering::GT : Ordering::LT;
    }
    if (tie_break_ == TieBreak::Lex) {
        for (std::size_t i : precedence_) {
            int diff = a.exponent(i) - b.exponent(i);
            if (diff != 0) return diff > 0 ? Ordering::GT : Ordering::LT;
        }
    } else {
        // revlex: the last (least-precedence) differing variable decides,
        // with the smaller exponent winning.
        for (std::size_t k = precedence_.size(); k-- > 0;) {
            std::size_t i = precedence_[k];
            int diff = a.exponent(i) - b.exponent(i);
            if (diff != 0) return diff < 0 ? Ordering::GT : Ordering::LT;
        }
    }
    return Ordering::EQ;
}

Ordering compare(const Monomial& a, const Monomial& b, const TermOrder& ord) {
    return ord.compare(a, b);
}

// ------------------------------------------------------------ Polynomial

Polynomial::Polynomial(VarSetPtr ambient) : ambient_(std::move(ambient)) {
    if (!ambient_) throw parameter_error("Polynomial: null ambient");
}

Polynomial Polynomial::constant(VarSetPtr ambient, const QQ& c) {
    Polynomial p(std::move(ambient));
    if (c != 0) p.terms_.push_back({Monomial::one(p.ambient_->size()), c});
    return p;
}

Polynomial Polynomial::term(VarSetPtr ambient, Monomial m, const QQ& c) {
    Polynomial p(std::move(ambient));
    if (m.nvars() != p.ambient_->size()) throw ambient_mismatch("Polynomial::term: wrong variable count");
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::variable(VarSetPtr ambient, std::size_t i) {
    std::size_t n = ambient->size();
    return term(std::move(ambient), Monomial::var(n, i), QQ(1));
}

Polynomial Polynomial::from_terms(VarSetPtr ambient, std::vector<Term> terms) {
    Polynomial p(std::move(ambient));
    for (const auto& t : terms)
        if (t.mono.nvars() != p.ambient_->size())
            throw ambient_mismatch("Polynomial::from_terms: wrong variable count");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return b.mono < a.mono; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

QQ Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return QQ(0);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ambient(*ambient_, *o.ambient_);
    Polynomial r(ambient_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (o.terms_[j].mono < terms_[i].mono) {
            r.terms_.push_back(terms_[i++]);
        } else if (terms_[i].mono < o.terms_[j].mono) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            QQ c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) r.terms_.push_back({terms_[i].mono, c});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ambient(*ambient_, *o.ambient_);
    std::map<Monomial, QQ> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            auto [it, fresh] = acc.try_emplace(std::move(m), a.coeff * b.coeff);
            if (!fresh) it->second += a.coeff * b.coeff;
        }
    Polynomial r(ambient_);
    r.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) r.terms_.push_back({it->first, it->second});
    return r;
}

Polynomial Polynomial::scaled(const QQ& c) const {
    if (c == 0) return Polynomial(ambient_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const QQ& c) const {
    if (m.nvars() != ambient_->size()) throw ambient_mismatch("times_term: wrong variable count");
    if (c == 0) return Polynomial(ambient_);
    Polynomial r(ambient_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // multiplying by a fixed monomial preserves the structural order
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ambient_->same_as(*o.ambient_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

bool Polynomial::is_weighted_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_[0].mono.weighted_degree(*ambient_);
    for (const auto& t : terms_)
        if (t.mono.weighted_degree(*ambient_) != d) return false;
    return true;
}

long Polynomial::weighted_degree() const {
    if (terms_.empty()) throw zero_polynomial_error("weighted_degree of zero polynomial");
    long d = terms_[0].mono.weighted_degree(*ambient_);
    for (const auto& t : terms_)
        if (t.mono.weighted_degree(*ambient_) != d)
            throw error("weighted_degree: polynomial is not weighted-homogeneous");
    return d;
}

// ------------------------------------------------------ division support

Term leading_term(const Polynomial& f, const TermOrder& ord) {
    if (f.is_zero()) throw zero_polynomial_error("leading_term of zero polynomial");
    if (!f.ambient().same_as(ord.ambient()))
        throw ambient_mismatch("leading_term: order over a different variable set");
    const auto& ts = f.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ord.compare(ts[i].mono, ts[best].mono) == Ordering::GT) best = i;
    return ts[best];
}

Monomial leading_monomial(const Polynomial& f, const TermOrder& ord) {
    return leading_term(f, ord).mono;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord) {
    for (const auto& g : G) {
        if (g.is_zero()) throw zero_polynomial_error("normal_form: zero divisor polynomial");
        if (!g.ambient().same_as(f.ambient()))
            throw ambient_mismatch("normal_form: mixed variable sets");
    }
    std::vector<Term> lead;
    lead.reserve(G.size());
    for (const auto& g : G) lead.push_back(leading_term(g, ord));

    Polynomial h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        Term lt = leading_term(h, ord);
        bool reduced = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (lead[k].mono.divides(lt.mono)) {
                QQ c = lt.coeff / lead[k].coeff;
                h = h - G[k].times_term(lt.mono.quotient_by(lead[k].mono), c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(lt);
            h = h - Polynomial::term(h.ambient_ptr(), lt.mono, lt.coeff);
        }
    }
    return Polynomial::from_terms(f.ambient_ptr(), std::move(remainder));
}

// -------------------------------------------------------------- text I/O

std::string to_string(const Monomial& m, const VarSet& vs) {
    if (m.nvars() != vs.size()) throw ambient_mismatch("to_string: wrong variable count");
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (!first) os << "*";
        os << vs.name(i);
        if (m.exponent(i) != 1) os << "^" << m.exponent(i);
        first = false;
    }
    return os.str();
}

std::string to_string(const Polynomial& f, const TermOrder* ord) {
    if (f.is_zero()) return "0";
    std::vector<Term> ts = f.terms();
    if (ord) {
        std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
            return ord->compare(a.mono, b.mono) == Ordering::GT;
        });
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        QQ c = ts[i].coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (i == 0)
            os << (neg ? "-" : "");
        else
            os << (neg ? "-" : "+");
        std::string mono = to_string(ts[i].mono, f.ambient());
        if (mono == "1") {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << "*";
            os << mono;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    VarSetPtr vs;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    ZZ parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer at offset " + std::to_string(pos));
        return ZZ(s.substr(start, pos - start));
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos;
        auto ok = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
        };
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            throw parse_error("expected variable name at offset " + std::to_string(pos));
        while (pos < s.size() && ok(s[pos])) ++pos;
        return s.substr(start, pos - start);
    }

    // factor := integer [/ integer] | name [^ integer]
    void parse_factor(QQ& coeff, Monomial& mono) {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            ZZ num = parse_integer();
            if (eat('/')) {
                ZZ den = parse_integer();
                if (den == 0) throw parse_error("zero denominator");
                coeff *= QQ(num, den);
            } else {
                coeff *= QQ(num);
            }
            return;
        }
        std::string name = parse_name();
        auto idx = vs->index_of(name);
        if (!idx) throw parse_error("unknown variable: " + name);
        long p = 1;
        if (eat('^')) p = to_ll(parse_integer());
        if (p < 0) throw parse_error("negative exponent");
        mono = mono * Monomial::var(vs->size(), *idx, static_cast<int>(p));
    }

    Polynomial parse() {
        std::vector<Term> terms;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            int sign = 1;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                throw parse_error("expected + or - at offset " + std::to_string(pos));
            }
            first = false;
            if (peek() == '\0') throw parse_error("dangling sign");
            QQ coeff(sign);
            Monomial mono = Monomial::one(vs->size());
            parse_factor(coeff, mono);
            while (eat('*')) parse_factor(coeff, mono);
            terms.push_back({std::move(mono), coeff});
        }
        return Polynomial::from_terms(vs, std::move(terms));
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, VarSetPtr ambient) {
    if (text == "0") return Polynomial::zero(ambient);
    Parser p{text, 0, ambient};
    return p.parse();
}

} // namespace wrc
