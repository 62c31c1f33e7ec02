#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

// Grid cell in matrix coordinates, 1-indexed: row 1 is the top row.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// A permutation w of {1..n} in one-line notation: w(j) = window[j-1].
// The permutation matrix has its 1 for column j in row w(j), i.e. the
// matrix obtained by permuting the rows of the identity.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);
    static Permutation longest(int n);      // n, n-1, ..., 1
    // Accepts "34512" or, for values above 9, "10,3,1,...".
    static Permutation parse(const std::string& s);

    int n() const { return static_cast<int>(window_.size()); }
    int operator()(int j) const { return window_.at(j - 1); }
    const std::vector<int>& window() const { return window_; }

    bool is_identity() const;
    Permutation inverse() const;
    // (u*v)(i) = u(v(i)).
    Permutation operator*(const Permutation& v) const;
    // Right multiplication by the simple transposition s_b: swaps the
    // window entries at positions b and b+1.
    Permutation times_s(int b) const;

    int length() const;                     // number of inversions
    std::vector<int> descents() const;      // positions i with w(i) > w(i+1)
    std::vector<int> ascents() const;
    std::optional<int> last_descent() const;
    std::optional<int> last_ascent() const;

    std::string str() const;

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> window_;
};

// A rectangular 0/1 matrix with at most one 1 per row and per column.
class PartialPermutation {
  public:
    PartialPermutation(int rows, int cols, std::vector<Cell> ones);
    explicit PartialPermutation(const Permutation& w);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Cell>& ones() const { return ones_; }

    bool has_one(int row, int col) const;
    std::optional<int> one_in_row(int row) const;   // column of the 1, if any
    std::optional<int> one_in_col(int col) const;   // row of the 1, if any

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cell> ones_;    // sorted
};

// A set of boxes in an m x n grid (Rothe diagrams, essential sets).
class Diagram {
  public:
    Diagram() = default;
    explicit Diagram(std::vector<Cell> boxes);

    const std::vector<Cell>& boxes() const { return boxes_; }
    bool contains(Cell c) const;
    int size() const { return static_cast<int>(boxes_.size()); }
    bool empty() const { return boxes_.empty(); }

    bool operator==(const Diagram&) const = default;

  private:
    std::vector<Cell> boxes_;   // sorted
};

// r[p][q] = rank of the upper-left p x q submatrix = number of 1s in it.
class RankTable {
  public:
    RankTable(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int p, int q) const { return r_.at((p - 1) * cols_ + (q - 1)); }
    int& at(int p, int q) { return r_.at((p - 1) * cols_ + (q - 1)); }

  private:
    int rows_, cols_;
    std::vector<int> r_;
};

enum class PatternKind { p321, p231, p132 };

struct PatternTriple {
    int i1 = 0, i2 = 0, i3 = 0;      // positions, i1 < i2 < i3
    int v1 = 0, v2 = 0, v3 = 0;      // values w(i1), w(i2), w(i3)
    PatternKind kind = PatternKind::p321;

    bool operator==(const PatternTriple&) const = default;
};

Diagram rothe_diagram(const PartialPermutation& w);
Diagram rothe_diagram(const Permutation& w);

// Boxes of d with neither their east nor their south neighbor in d.
std::vector<Cell> essential_set(const Diagram& d);

RankTable rank_table(const PartialPermutation& w);
RankTable rank_table(const Permutation& w);

// v <= w in Bruhat order iff rank(v_{p x q}) >= rank(w_{p x q}) for all p, q.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// The pattern triples realizing the kind, lexicographic by positions, with
// witnesses sharing the same (i2, i3) collapsed to the nearest i1 (so 1243
// has the single 132 pattern 243, not also 143).
std::vector<PatternTriple> find_patterns(const Permutation& w, PatternKind kind);
bool avoids(const Permutation& w, PatternKind kind);

// The diagram of w*s_b computed from D(w) without touching w*s_b itself:
// for a descent b of w, the box at (w(b+1), b) is deleted, boxes of column b
// strictly below row w(b+1) move one step right, everything else stays.
// Throws if b is not a descent of w.
Diagram diagram_move(const Permutation& w, int b);

std::vector<Permutation> all_permutations(int n);

}  // namespace schubert
