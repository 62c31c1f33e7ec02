#pragma once

#include "schubert/groebner.hpp"
#include "schubert/ideals.hpp"

#include <string>
#include <vector>

namespace schubert {

// ---------------------------------------------------------------------------
// Last-descent recursion steps
// ---------------------------------------------------------------------------

enum class StepCase { Unit, Base, Ascent, Descent };

std::string step_case_name(StepCase c);

// One level of the last-descent recursion at b for the pair (v, w). In the
// patch family I = Q_{v,w} and J, N are the column-swapped T ideals; in the
// KL family I = I_{v,w} and J, N are the recursion-matrix ideals. When b is
// an ascent of w the two targets coincide and J = N.
struct RecursionStep {
    Permutation v, w;
    Family family = Family::Patch;
    StepCase kind = StepCase::Unit;
    int b = 0;                 // last descent of v; 0 in the unit case
    GeneratorSet I, J, N;
    std::vector<int> shift;    // multidegree of the top variable at (v(b+1), b)
};

RecursionStep recursion_step(const Permutation& v, const Permutation& w,
                             Family family = Family::Patch);

struct CheckResult {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::string detail;    // failure witness, or a short note
};

struct StepReport {
    StepCase kind = StepCase::Unit;
    std::vector<CheckResult> checks;
    bool ok() const;    // no applicable check failed
};

// The step-level proof obligations of a descent step, each reported
// pass/fail: splitting the generators of I along the top variable y
// regenerates J (from the y-cofactors and the y-free part) and N (from the
// y-free part alone), N sits inside both I and J, the cross products
// g_i r_j - g_j r_i of the split pairs fall into N, the initial ideals obey
// in(I) = in(N) + y * in(J) on certified bases, and each applicable
// deleted-row/deleted-column box ideal lands in N. An ascent step only
// checks that I and J generate the same ideal; unit and base steps have
// nothing to check.
StepReport verify_step(const RecursionStep& s, const BuchbergerOptions& opt = {});

// ---------------------------------------------------------------------------
// Alternating minor relations
// ---------------------------------------------------------------------------

// The NW rows x cols block of m with an identity block appended on the
// right: the ambient matrix for maximal-minor bookkeeping.
GenericMatrix concat_identity(const GenericMatrix& m, int rows, int cols);

// The alternating sum over a generic k x (m+k) matrix [M | Id]:
//   sum_{l=1..k+1} (-1)^l P[i_1..i_{k-1}, j_l] * P[j_1 .. omit j_l .. j_{k+1}]
// where P[c_1..c_k] is the maximal minor on the listed columns, in listed
// order. Returns true iff the sum vanishes identically. The i sequence has
// k-1 entries and the j sequence k+1, both strictly increasing inside
// [1, m+k]; anything else throws.
bool plucker_verify(int k, int m, const std::vector<int>& i_seq,
                    const std::vector<int>& j_seq);

// M_[p;q] equals, with no sign correction, the maximal minor of [M | Id] on
// the columns q followed by the identity columns complementary to the row
// set p. Checked symbolically on a generic k x m matrix.
bool minor_translation_check(int k, int m, const std::vector<int>& p,
                             const std::vector<int>& q);

// Membership of f1 f2' - f2 f1' in the sum of the two box ideals at
// (alpha, b) and (alpha_prime, b), where b is the last descent of v,
// f1 is the minor of the patch matrix on rows p minus {v(b+1)} and columns
// q, f2 the minor on rows p and columns q then b, and the primed pair is
// built the same way from p_prime, q_prime. Row sets must contain v(b+1)
// and have the sizes forced by the rank conditions; see n_alpha_b.
bool difference_in_n(const Permutation& v, const Permutation& w, int alpha,
                     const std::vector<int>& p, const std::vector<int>& q,
                     int alpha_prime, const std::vector<int>& p_prime,
                     const std::vector<int>& q_prime,
                     const BuchbergerOptions& opt = {});

// ---------------------------------------------------------------------------
// Homogeneity in the all-degrees-one grading
// ---------------------------------------------------------------------------

struct PatternPairWitness {
    PatternTriple in_v;    // 321 or 231 pattern of v, per `inequality`
    PatternTriple in_w;    // 132 pattern of w
    int inequality = 0;    // 1: the 321 condition failed; 2: the 231 condition
};

// Verdict on standard-grading homogeneity. The direct flags test the
// essential-minor generators themselves; the sufficient flags evaluate the
// pattern criteria (w 132-avoiding, or the position inequalities over every
// pattern pair). The pair scans use all pattern occurrences, not the
// collapsed find_patterns list: the 231 condition reads the first letter of
// a pattern, which collapsing does not preserve.
struct HomogeneityVerdict {
    bool applicable = false;      // w <= v in Bruhat order
    bool direct_patch = false;    // generators of Q_{v,w} are homogeneous
    bool direct_kl = false;       // generators of I_{v,w} are homogeneous
    bool patch_sufficient = false;
    bool kl_sufficient = false;
    std::vector<PatternPairWitness> witnesses;    // pairs violating a condition
};

HomogeneityVerdict classify_homogeneity(const Permutation& v, const Permutation& w);

// ---------------------------------------------------------------------------
// Biliaison chains
// ---------------------------------------------------------------------------

enum class ChainAction { Biliaison, Identity, AddVariable };

std::string chain_action_name(ChainAction a);

struct ChainStep {
    Permutation v, w;
    int b = 0;
    ChainAction action = ChainAction::Identity;
    int height = 0;                    // 1 on biliaison steps
    std::vector<Polynomial> I, J, N;   // rewritten into the root ring
    std::vector<CheckResult> checks;
};

struct BiliaisonChain {
    Permutation v, w;
    Family family = Family::Patch;
    std::vector<ChainStep> steps;
    std::vector<Polynomial> terminal;    // complete intersection of variables
    bool terminal_linear = false;        // every terminal generator a variable
    bool complete = false;               // recursion reached a terminal with all checks green

    bool ok() const { return complete && terminal_linear; }
};

// Walks the last-descent recursion and records one step per level: a
// height-1 biliaison on N when the top variable stays outside I, a plain
// ideal equality when b is an ascent of w, and an added indeterminate when
// the top variable lies in I (then J is the whole ring and I = N + <y>).
// Every biliaison re-checks its witnesses in the all-degrees-one grading:
// N inside I and J, cross products of the split pairs inside N, the
// Hilbert-numerator identity K(I) = K(N) - t*(K(N) - K(J)), and the height
// pattern ht I = ht J = ht N + 1. Cohen-Macaulayness and generic
// Gorensteinness of the middle ideals are carried as assumptions of the
// construction, not re-proved. Throws when the ideal of (v, w) is the unit
// ideal or fails the homogeneity gate; classify_homogeneity names the
// obstruction.
BiliaisonChain glicci_chain(const Permutation& v, const Permutation& w,
                            Family family = Family::Patch,
                            const BuchbergerOptions& opt = {});

}  // namespace schubert
