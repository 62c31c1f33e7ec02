#pragma once

#include "schubert/polynomial.hpp"

#include <map>
#include <vector>

namespace schubert {

// A Z^d-valued grading on a finite variable set. Positivity (only constants
// in degree 0) is certified by an explicit integer functional lambda with
// lambda . deg(v) > 0 for every variable; constructions that know their
// grading supply the certificate, ad-hoc ones may try the all-ones default.
class GradingMap {
  public:
    GradingMap(int dim, std::map<Var, std::vector<int>> degrees,
               std::vector<int> certificate = {});

    // Standard grading: every variable has degree 1 in Z^1.
    static GradingMap standard(const std::vector<Var>& vars);

    int dim() const { return dim_; }
    bool has(Var v) const { return degrees_.count(v) > 0; }
    const std::vector<int>& degree(Var v) const;
    std::vector<Var> variables() const;

    std::vector<int> monomial_degree(const Monomial& m) const;

    bool is_positive() const { return positive_; }

    // Append one coordinate carrying the total (polynomial) degree. The
    // result is always a positive grading and refines this one.
    GradingMap refined_with_total_degree() const;

  private:
    int dim_;
    std::map<Var, std::vector<int>> degrees_;
    std::vector<int> certificate_;
    bool positive_ = false;
};

struct Multidegree {
    enum class Kind { zero, homogeneous, inhomogeneous };
    Kind kind = Kind::zero;
    std::vector<int> degree;    // meaningful only when homogeneous

    bool operator==(const Multidegree&) const = default;
};

Multidegree multidegree(const Polynomial& f, const GradingMap& g);

}  // namespace schubert
