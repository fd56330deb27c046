#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wrc/errors.hpp"
#include "wrc/qq.hpp"

namespace wrc {

/// Ordered set of variables with a positive integer weight per variable.
/// The position of a name is the exponent-vector index everywhere.
class VarSet {
public:
    VarSet(std::vector<std::string> names, std::vector<long> weights);

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names,
                                              std::vector<long> weights);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    long weight(std::size_t i) const { return weights_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<long>& weights() const { return weights_; }

    std::optional<std::size_t> index_of(const std::string& name) const;

    /// Same names in the same order with the same weights.
    bool same_as(const VarSet& other) const;

    /// Copy of this variable set with every weight set to 1.
    std::shared_ptr<const VarSet> unweighted() const;

private:
    std::vector<std::string> names_;
    std::vector<long> weights_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

/// Exponent vector over some VarSet. Carries only the exponents; the
/// ambient set travels separately (Polynomial stores it once).
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial var(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t nvars() const { return e_.size(); }
    int exponent(std::size_t i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const;

    long total_degree() const;
    long weighted_degree(const VarSet& vs) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / o; requires o.divides(*this).
    Monomial quotient_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    /// Structural (plain lexicographic on exponent vectors) order used for
    /// canonical storage; not a term order.
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

private:
    std::vector<int> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

enum class Ordering { LT, EQ, GT };
enum class TieBreak { Lex, RevLex };

/// Matrix term order: integer weight rows compared first, then a lex or
/// revlex tie-break along an explicit variable precedence list.
class TermOrder {
public:
    TermOrder(VarSetPtr ambient, std::vector<std::vector<long>> weight_rows,
              TieBreak tie_break, std::vector<std::size_t> precedence);

    /// Graded reverse lexicographic with the ambient's listed precedence.
    static TermOrder grevlex(VarSetPtr ambient);

    Ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::LT; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::GT; }

    const VarSet& ambient() const { return *ambient_; }
    VarSetPtr ambient_ptr() const { return ambient_; }
    const std::vector<std::vector<long>>& weight_rows() const { return weight_rows_; }
    TieBreak tie_break() const { return tie_break_; }
    const std::vector<std::size_t>& precedence() const { return precedence_; }

private:
    VarSetPtr ambient_;
    std::vector<std::vector<long>> weight_rows_;
    TieBreak tie_break_;
    std::vector<std::size_t> precedence_;
};

struct Term {
    Monomial mono;
    QQ coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are stored in a canonical structural order independent of any
/// term order; leading terms are taken against an explicit TermOrder.
class Polynomial {
public:
    explicit Polynomial(VarSetPtr ambient);

    static Polynomial zero(VarSetPtr ambient) { return Polynomial(std::move(ambient)); }
    static Polynomial constant(VarSetPtr ambient, const QQ& c);
    static Polynomial term(VarSetPtr ambient, Monomial m, const QQ& c);
    static Polynomial variable(VarSetPtr ambient, std::size_t i);
    static Polynomial from_terms(VarSetPtr ambient, std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    VarSetPtr ambient_ptr() const { return ambient_; }
    const VarSet& ambient() const { return *ambient_; }

    QQ coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const QQ& c) const;
    Polynomial times_term(const Monomial& m, const QQ& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// True when all terms share one weighted degree (zero is homogeneous).
    bool is_weighted_homogeneous() const;
    /// Weighted degree of a homogeneous polynomial; zero_polynomial_error on 0,
    /// error when inhomogeneous.
    long weighted_degree() const;

private:
    VarSetPtr ambient_;
    std::vector<Term> terms_; // structural order, descending; no zero coefficients
    void normalize();
};

Ordering compare(const Monomial& a, const Monomial& b, const TermOrder& ord);

/// Maximal term of f under ord; zero_polynomial_error on f = 0.
Term leading_term(const Polynomial& f, const TermOrder& ord);
Monomial leading_monomial(const Polynomial& f, const TermOrder& ord);

/// Remainder of multivariate division of f by G under ord. Deterministic:
/// the leading term of the running polynomial is reduced by the first
/// element of G whose leading monomial divides it.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord);

/// Macaulay2-like rendering, e.g. "x_0*x_2-x_1^2". Terms are listed in
/// descending order of `ord` when given, else in canonical structural order.
std::string to_string(const Polynomial& f, const TermOrder* ord = nullptr);
std::string to_string(const Monomial& m, const VarSet& vs);

/// Parses the same syntax to_string produces (+, -, *, ^, rational coefficients).
Polynomial parse_polynomial(const std::string& text, VarSetPtr ambient);

} // namespace wrc
