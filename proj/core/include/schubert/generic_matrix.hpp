#pragma once

#include "schubert/grading.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/term_order.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

// Coordinate-patch conventions for the specialized matrices.
enum class Convention { PatchBminusG, KLBminusG, KLGmodBplus };

std::string convention_name(Convention c);
Convention parse_convention(const std::string& s);
// Display letter: 'z' for the patch matrix, 'x' for the KL matrices. The
// projection that kills the east block relabels the survivors x_ij.
char convention_letter(Convention c);

// Ideal family selector used by the tools.
enum class Family { Patch, KL, Schubert };

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct MatrixEntry {
    enum Kind : std::uint8_t { Zero, One, Variable };
    Kind kind = Kind::Zero;
    Var var{};    // meaningful only when kind == Variable

    bool operator==(const MatrixEntry&) const = default;
};

// A rectangular matrix whose entries are 0, 1, or named variables. Entries
// are addressed 1-indexed with row 1 on top. A variable's name is the grid
// position it was born at; operations that move or rename entries (column
// swaps, recursion substitutions) keep whatever names they are given, which
// is what lets a derived matrix live in the polynomial ring of the original.
// After a substitution the same variable may legally sit in two positions.
class GenericMatrix {
  public:
    GenericMatrix() = default;
    GenericMatrix(int rows, int cols);    // all zero

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const MatrixEntry& at(int i, int j) const;
    MatrixEntry& at(int i, int j);
    Polynomial entry(int i, int j) const;

    std::vector<Var> variables() const;    // sorted, deduplicated
    // Variables strictly east of a 1 in their own row: the y block of a
    // patch matrix. Empty for the KL conventions.
    std::vector<Var> east_variables() const;
    // variables() minus east_variables().
    std::vector<Var> west_variables() const;

    bool operator==(const GenericMatrix&) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<MatrixEntry> grid_;
};

// Every entry a variable; the coordinate matrix of I_w for partial w.
GenericMatrix variable_matrix(int rows, int cols);

// The specialized n x n matrix of a convention:
//   PatchBminusG: 1 at (v(i), i), 0 due south of each 1, variables elsewhere.
//   KLBminusG:    1 at (v(i), i), 0 due south and due east.
//   KLGmodBplus:  1 at (n-v(i)+1, i), 0 due south and due east.
GenericMatrix build_matrix(const Permutation& v, Convention c);

// Columns b and b+1 exchanged; entries keep their names.
GenericMatrix column_swap(const GenericMatrix& m, int b);

// The KL matrix of v*s_b with its column-(b+1) variables renamed into
// column b, for a descent b of v. Uses only variables of the KL matrix
// of v (possibly repeating one across two positions).
GenericMatrix kl_recursion_matrix(const Permutation& v, int b);

// The largest variable of the matrix under its term order: position
// (v(b+1), b) for the last descent b in the B_-\G conventions, position
// (n-v(b+1)+1, b) for the last ascent b in the G/B_+ convention. Empty
// when v has no descent (resp. no ascent).
std::optional<Var> last_variable(const Permutation& v, Convention c);

// Lex order on the matrix variables: west block before east block, each
// block column-major from the rightmost column, top to bottom inside a
// column.
TermOrder term_order_for(const Permutation& v, Convention c);

// Torus weights making the whole ideal family homogeneous, with positivity
// certificate: deg z_ij = e_{v^{-1}(i)} - e_j for the B_-\G conventions
// (certificate lambda_c = n - v(c)), deg x_ij = e_{v(j)} - e_{n-i+1} for
// G/B_+ (certificate lambda_k = n - k).
GradingMap grading_for(const Permutation& v, Convention c);

std::string render(const GenericMatrix& m, char letter = 'z');

}  // namespace schubert
