#pragma once

#include "schubert/polynomial.hpp"

#include <compare>
#include <vector>

namespace schubert {

// Lexicographic term order over an explicit variable ranking (highest
// priority first). Monomials are compared at the first ranked variable
// whose exponents differ.
class TermOrder {
  public:
    explicit TermOrder(std::vector<Var> ranking);

    const std::vector<Var>& ranking() const { return ranking_; }
    int rank_of(Var v) const;     // 0 is the highest-ranked variable
    bool knows(Var v) const;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const;

  private:
    std::vector<Var> ranking_;
    std::vector<std::pair<Var, int>> index_;    // sorted by Var
};

// The base variable order of the specialized matrices: columns right to
// left, rows top to bottom within each column.
std::vector<Var> column_major_ranking(std::vector<Var> vars);

}  // namespace schubert
