#pragma once

#include "schubert/generic_matrix.hpp"
#include "schubert/grading.hpp"
#include "schubert/groebner.hpp"
#include "schubert/kpolynomial.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace schubert {

struct KPolyOptions {
    int ie_max_generators = 22;    // inclusion-exclusion subset budget
    BuchbergerOptions buchberger;
};

// Numerator of the Hilbert series of R/I over the common denominator
// prod_x (1 - t^{deg x}). Both algorithms are exact; both insist on a
// positively graded ring.
//
// Subset inclusion-exclusion over the minimal generators; throws
// ComplexityLimit past max_generators.
LaurentKPolynomial kpoly_inclusion_exclusion(const MonomialIdeal& ideal,
                                             const GradingMap& g,
                                             int max_generators = 22);
// Pivot recursion K(I) = K(I + <x>) + t^{deg x} K(I : x) with coprime
// factorization, connected-component splitting, and memoization.
LaurentKPolynomial kpoly_pivot(const MonomialIdeal& ideal, const GradingMap& g);
// The pivot value, cross-checked against inclusion-exclusion whenever the
// generator count is within budget; disagreement is an internal error.
LaurentKPolynomial kpoly_monomial(const MonomialIdeal& ideal, const GradingMap& g,
                                  const KPolyOptions& opt = {});

// K-polynomial of an arbitrary ideal through its initial ideal, computed
// under the given order and independently under its reverse; the two
// results must coincide (Groebner degeneration preserves the multigraded
// Hilbert series), anything else is an internal error.
LaurentKPolynomial kpoly_ideal(const std::vector<Polynomial>& gens,
                               const TermOrder& order, const GradingMap& g,
                               const KPolyOptions& opt = {});

// Counts of standard monomials (monomials outside the ideal) of total
// degree <= bound, keyed by degree in the total-degree refinement of g
// (dimension g.dim() + 1, last coordinate the polynomial degree).
std::map<std::vector<int>, Int> hilbert_slice(const MonomialIdeal& ideal,
                                              const GradingMap& g, int bound = 6);
// The same slice obtained analytically: the K-polynomial in the refined
// grading times the geometric series of every variable, truncated at total
// degree bound.
std::map<std::vector<int>, Int> hilbert_expansion(const MonomialIdeal& ideal,
                                                  const GradingMap& g,
                                                  int bound = 6);

// One step of the K-polynomial recursion, checked as an exact Laurent
// identity. PatchBminusG uses the same-ring form: b the last descent of v,
// I, J, N the patch ideal of (v,w) and the two transported ideals of the
// swapped matrix, shift e = deg(z_max) = e_{b+1} - e_b, case one when b is
// an ascent of w. KLGmodBplus uses b the last ascent of v, the three ideals
// in their own rings, shift e = deg(x_last) = e_{v(b)} - e_{v(b+1)}, case
// one when b is a descent of w. Case one asserts K(I) = K(J); case two
// asserts K(I) = K(J) + (1 - t^e) K(N) - (1 - t^e) K(J).
struct KostantReport {
    bool applicable = false;
    std::string reason;    // which precondition failed, when !applicable
    Convention convention = Convention::PatchBminusG;
    int b = 0;
    bool case_one = false;
    std::vector<int> shift;            // e, case two only
    LaurentKPolynomial kI, kJ, kN;     // kN only in case two
    LaurentKPolynomial lhs, rhs;
    bool equal = false;
};

KostantReport verify_kostant(const Permutation& v, const Permutation& w,
                             Convention c, const KPolyOptions& opt = {});

}  // namespace schubert
