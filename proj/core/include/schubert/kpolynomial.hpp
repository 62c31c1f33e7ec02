#pragma once

#include "schubert/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace schubert {

// Element of Z[t_1^{+-1}, ..., t_d^{+-1}]: integer coefficients on integer
// exponent vectors. All nonzero terms of one value share the dimension d.
class LaurentKPolynomial {
  public:
    LaurentKPolynomial() = default;    // zero
    static LaurentKPolynomial constant(Int c, int dim);
    static LaurentKPolynomial one(int dim) { return constant(1, dim); }
    static LaurentKPolynomial monomial(std::vector<int> e, Int c = 1);
    // 1 - t^e
    static LaurentKPolynomial one_minus_t(const std::vector<int>& e);
    // Bulk build from an exponent -> coefficient map; zero entries dropped.
    static LaurentKPolynomial from_map(std::map<std::vector<int>, Int> m);

    bool is_zero() const { return terms_.empty(); }
    int dim() const { return dim_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    Int coefficient(const std::vector<int>& e) const;

    LaurentKPolynomial operator+(const LaurentKPolynomial& g) const;
    LaurentKPolynomial operator-(const LaurentKPolynomial& g) const;
    LaurentKPolynomial operator-() const;
    LaurentKPolynomial operator*(const LaurentKPolynomial& g) const;
    LaurentKPolynomial shifted(const std::vector<int>& e) const;    // * t^e

    // Zeros of different provenance carry different dim_ markers, so
    // equality looks at the terms alone.
    bool operator==(const LaurentKPolynomial& g) const { return terms_ == g.terms_; }

    std::string str() const;

  private:
    void insert(std::vector<int> e, Int c);
    int dim_ = -1;    // -1 until the first term fixes it
    std::map<std::vector<int>, Int> terms_;
};

}  // namespace schubert
