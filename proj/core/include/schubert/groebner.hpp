#pragma once

#include "schubert/grading.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/term_order.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace schubert {

// Thrown when a basis computation exceeds its S-pair budget. Callers doing
// batch sweeps catch this per pair instead of aborting the sweep.
struct GroebnerLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a combinatorial search would exceed its enumeration budget
// (vertex counts, subset sweeps, generator caps).
struct ComplexityLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
    std::size_t pair_limit = 200000;    // S-pairs popped before giving up
};

// A certified reduced basis: elements are content-primitive with positive
// leading coefficient, leading monomials are pairwise non-divisible, and no
// monomial of an element is reducible by another element's lead. This is
// the integer image of the unique monic reduced basis over the rationals.
struct GroebnerBasis {
    TermOrder order;
    std::vector<Polynomial> polys;    // sorted by leading monomial, largest first
};

// Full remainder of f under gcd-scaled division by the basis list, always
// reducing the largest reducible monomial by the first divisor in basis
// order. The result is primitive with positive lead (zero stays zero);
// remainder zero is exact rational ideal membership when the list is a
// certified basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Buchberger with the normal selection strategy (smallest S-pair lcm first)
// and the coprime-lead criterion; the chain criterion is deliberately not
// applied. Throws GroebnerLimit past opt.pair_limit.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order,
                         const BuchbergerOptions& opt = {});

struct SPairFailure {
    int i = 0, j = 0;          // indices into the input generator list
    Polynomial remainder;      // nonzero normal form of the S-polynomial
};

struct GroebnerCheck {
    bool ok = true;
    int pairs_reduced = 0;
    int pairs_coprime = 0;     // skipped by the coprime-lead criterion
    std::vector<SPairFailure> failures;
};

// Verification only: S-pair reduction over the given generators, never
// completing them to a basis. ok means every S-polynomial reduces to zero,
// i.e. the generators are a Groebner basis of their ideal.
GroebnerCheck is_groebner(const std::vector<Polynomial>& gens,
                          const TermOrder& order);

// A monomial ideal kept as the antichain of its minimal generators.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;    // zero ideal
    explicit MonomialIdeal(std::vector<Monomial> gens);

    const std::vector<Monomial>& gens() const { return gens_; }
    bool zero() const { return gens_.empty(); }
    bool unit() const;
    bool contains(const Monomial& m) const;
    bool is_squarefree() const;    // every minimal generator squarefree

    MonomialIdeal plus(const MonomialIdeal& o) const;      // ideal sum
    MonomialIdeal times(const Monomial& m) const;          // generators scaled

    bool operator==(const MonomialIdeal&) const = default;

  private:
    std::vector<Monomial> gens_;    // minimal, structurally sorted
};

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

bool in_ideal(const Polynomial& f, const GroebnerBasis& gb);
// Every element of sub lies in the ideal of gb.
bool ideal_contains(const GroebnerBasis& gb, const std::vector<Polynomial>& sub);
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const TermOrder& order);

// No generator mixes distinct multidegrees (zero generators count as fine).
bool is_homogeneous(const std::vector<Polynomial>& gens, const GradingMap& g);

// The terms of f bucketed by multidegree, each bucket one polynomial.
std::vector<Polynomial> graded_components(const Polynomial& f, const GradingMap& g);

// Whether the IDEAL of gens is homogeneous, which is weaker than every
// listed generator being so: an ideal is homogeneous iff each graded
// component of each generator lies back in it, since the components
// generate the smallest homogeneous ideal containing the generators.
// Membership runs through a Groebner basis, so this can throw GroebnerLimit.
bool ideal_is_homogeneous(const std::vector<Polynomial>& gens, const GradingMap& g,
                          const TermOrder& order, const BuchbergerOptions& opt = {});

}  // namespace schubert
