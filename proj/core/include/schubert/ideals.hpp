#pragma once

#include "schubert/generic_matrix.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

#include <utility>
#include <vector>

namespace schubert {

// Where a generator came from: the rank-condition box and the rows/columns
// of the minor inside the ambient matrix.
struct MinorProvenance {
    Cell box;
    std::vector<int> rows;
    std::vector<int> cols;

    auto operator<=>(const MinorProvenance&) const = default;
};

struct Generator {
    Polynomial poly;    // primitive, sign-normalized, nonzero
    MinorProvenance from;
};

// A determinantal generating set. Zero minors are dropped, duplicates up to
// sign keep only the provenance-first copy, and `unit` records whether some
// minor is a nonzero constant (then the ideal is the whole ring; constant
// minors are exactly how incompatible rank conditions show up).
//
// The set is reduced, not the raw enumeration: leading 1s of each block are
// cofactor-expanded away before listing minors, and a minor is dropped when
// a row or column of its submatrix Laplace-expands over the remaining
// generators. Both moves rewrite the dropped minors inside the ideal of the
// kept ones, so the ideal is unchanged; the kept minors are the ones the
// smaller matrix actually needs.
struct GeneratorSet {
    GenericMatrix matrix;
    std::vector<Generator> gens;
    bool unit = false;

    std::vector<Polynomial> polys() const;
    bool zero() const { return gens.empty() && !unit; }
};

// The reduced generating set of the ideal of minors of size
// 1 + rank(w_{p x q}) in m_{p x q}, over the essential boxes of D(w) or
// over every box of the grid of w. When the 1s of a block already violate
// its rank condition the ideal is the whole ring: `unit` is set and the
// witnessing +-1 minor is recorded.
GeneratorSet ideal_generators(const GenericMatrix& m, const PartialPermutation& w,
                              bool essential_only = true);

// Q_{v,w}: essential minors of the patch matrix of v.
GeneratorSet patch_ideal(const Permutation& v, const Permutation& w,
                         bool essential_only = true);
// I_{v,w}: essential minors of the KL matrix of v in the chosen convention.
// For KLGmodBplus the rank conditions are those of w_0 * w.
GeneratorSet kl_ideal(const Permutation& v, const Permutation& w,
                      Convention c = Convention::KLBminusG,
                      bool essential_only = true);
// I_w on the all-variable matrix, for a permutation or partial permutation.
GeneratorSet schubert_ideal(const PartialPermutation& w, bool essential_only = true);

enum class TTarget { SameW, SwappedW };

// T_{v s_b, w} (SameW) or T_{v s_b, w s_b} (SwappedW) inside the ring of the
// patch matrix of v: minors of the column-swapped patch matrix with the rank
// conditions of w resp. w s_b, where b is the last descent of v.
GeneratorSet t_ideal(const Permutation& v, const Permutation& w, TTarget target,
                     bool essential_only = true);

// The KL-side analogue of t_ideal: minors of the recursion matrix of v at
// its last descent b (the KL matrix of v s_b living in the variables of the
// KL matrix of v) with the rank conditions of w resp. w s_b.
GeneratorSet l_ideal(const Permutation& v, const Permutation& w, TTarget target,
                     bool essential_only = true);

// The determinant of the submatrix on the given rows and columns, taken in
// listed order (transposing two entries flips the sign).
Polynomial minor_of(const GenericMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols);

// The ring isomorphism exchanging the column-b and column-(b+1) variable
// names. Maps generators of Q_{v s_b, w} onto generators of T_{v s_b, w}.
Polynomial phi_substitute(const Polynomial& f, int b);

// Kill the east variables of the patch matrix of v: the projection onto the
// KL coordinates. Maps Q_{v,w} generators onto I_{v,w} generators (some
// minors die; those are dropped by the callers that build sets).
Polynomial set_y_to_zero(const Polynomial& f, const Permutation& v);

// Decomposition of a generating set along a variable y occurring linearly:
// generators split as y*g + r, or land in h when y-free.
struct ZmaxSplit {
    Var y{};
    std::vector<std::pair<Polynomial, Polynomial>> gr;    // (g_i, r_i), g_i != 0
    std::vector<Polynomial> h;
};

// Throws if a generator has a term with y^2 or higher; the determinantal
// generators never do, y occupies a single matrix entry.
ZmaxSplit split_by_zmax(const std::vector<Polynomial>& gens, Var y);

// For the last descent b of v, also required to be a descent of w, and an
// essential box (alpha, b) of D(w) with alpha >= a := v(b+1): the minors of
// size 1 + rank(w_{alpha x b}) in the patch submatrix rows 1..alpha, cols
// 1..b with row a deleted, together with those with column b deleted.
// Throws when the box fails those conditions.
std::vector<Polynomial> n_alpha_b(const Permutation& v, const Permutation& w,
                                  int alpha);

// The rows alpha for which n_alpha_b applies; empty when b is not a descent
// of w or v has no descent.
std::vector<int> n_alpha_rows(const Permutation& v, const Permutation& w);

// w in S_n as the pair (v, w x 1_n) in S_2n with v(i) = n+i, v(n+i) = i:
// the KL ideal I_{v, w x 1_n} equals I_w in the NW n x n variables.
std::pair<Permutation, Permutation> embed_schubert(const Permutation& w);

}  // namespace schubert
