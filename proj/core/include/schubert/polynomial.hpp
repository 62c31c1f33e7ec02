#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace schubert {

using Int = boost::multiprecision::cpp_int;

// A matrix-position variable: the z_{i,j} (or x_{i,j}) sitting at row i,
// column j of a specialized generic matrix. Which letter it renders with is
// a display concern; identity is the position.
struct Var {
    std::int16_t row = 0;
    std::int16_t col = 0;

    auto operator<=>(const Var&) const = default;
};

Var var(int row, int col);
std::string var_name(Var v, char letter = 'z');

// Sparse monomial: sorted (variable, exponent) pairs, exponents positive.
class Monomial {
  public:
    Monomial() = default;  // the monomial 1
    explicit Monomial(std::vector<std::pair<Var, int>> exps);
    static Monomial variable(Var v, int exp = 1);

    const std::vector<std::pair<Var, int>>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int total_degree() const;
    int exponent_of(Var v) const;
    bool is_squarefree() const;
    std::vector<Var> support() const;

    Monomial operator*(const Monomial& m) const;
    bool divides(const Monomial& m) const;         // this | m
    Monomial divide_by(const Monomial& m) const;   // this / m, must divide
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    std::string str(char letter = 'z') const;

    // Structural ordering only (canonical storage), not a term order.
    auto operator<=>(const Monomial&) const = default;

  private:
    std::vector<std::pair<Var, int>> exps_;
};

class TermOrder;

struct Term {
    Monomial mono;
    Int coef;

    bool operator==(const Term&) const = default;
};

// Exact polynomial over the integers. Terms are kept sorted by the
// structural monomial order with no zero coefficients, so equal polynomials
// compare equal memberwise.
class Polynomial {
  public:
    Polynomial() = default;  // zero
    explicit Polynomial(Int constant);
    explicit Polynomial(std::vector<Term> terms);
    static Polynomial variable(Var v);
    static Polynomial monomial(const Monomial& m, Int c = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Nonzero constant, i.e. a unit generator up to content.
    bool is_nonzero_constant() const { return !is_zero() && is_constant(); }
    bool is_single_variable() const;   // exactly the polynomial c * v, c != 0
    int num_terms() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;
    std::vector<Var> support() const;
    bool involves(Var v) const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial times(const Monomial& m, const Int& c) const;
    Polynomial times(const Int& c) const;

    // Substitute variables simultaneously; map returns the replacement for
    // each variable (identity for untouched ones).
    Polynomial rename_vars(const std::function<Var(Var)>& f) const;
    // Kill every term containing one of the given variables.
    Polynomial zero_vars(const std::vector<Var>& vars) const;

    // Split f = x^1 * g + r with respect to variable y: g collects the
    // y-divisible terms divided by y once, r the rest. Throws if g still
    // involves y (i.e. some term had y^2 or higher).
    std::pair<Polynomial, Polynomial> split_linear(Var y) const;

    Int content() const;                 // gcd of coefficients, >= 0
    Polynomial primitive_part() const;   // content divided out, sign kept
    // Primitive and sign-normalized so the structurally-first term has a
    // positive coefficient; use for order-free canonical comparison.
    Polynomial canonical_up_to_sign() const;

    const Term& leading_term(const TermOrder& order) const;
    Monomial leading_monomial(const TermOrder& order) const;

    std::string str(char letter = 'z') const;
    std::string str(char letter, const TermOrder& order) const;

    bool operator==(const Polynomial&) const = default;
    // Structural total order for canonical sorting of generator lists.
    std::strong_ordering operator<=>(const Polynomial& g) const;

  private:
    void normalize();
    std::vector<Term> terms_;
};

// Exact determinant by cofactor expansion along the row or column with the
// most constant entries, memoized on (row set, column set). Size <= 8.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace schubert
