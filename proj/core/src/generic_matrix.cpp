#include "schubert/generic_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schubert {

std::string convention_name(Convention c) {
    switch (c) {
        case Convention::PatchBminusG: return "PatchBminusG";
        case Convention::KLBminusG: return "KLBminusG";
        case Convention::KLGmodBplus: return "KLGmodBplus";
    }
    throw std::logic_error("unknown convention");
}

Convention parse_convention(const std::string& s) {
    if (s == "patch" || s == "PatchBminusG") return Convention::PatchBminusG;
    if (s == "kl" || s == "KLBminusG") return Convention::KLBminusG;
    if (s == "gmodb" || s == "KLGmodBplus") return Convention::KLGmodBplus;
    throw std::invalid_argument("unknown convention '" + s +
                                "' (use patch, kl, or gmodb)");
}

char convention_letter(Convention c) {
    return c == Convention::PatchBminusG ? 'z' : 'x';
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Patch: return "patch";
        case Family::KL: return "kl";
        case Family::Schubert: return "schubert";
    }
    throw std::logic_error("unknown family");
}

Family parse_family(const std::string& s) {
    if (s == "patch") return Family::Patch;
    if (s == "kl") return Family::KL;
    if (s == "schubert") return Family::Schubert;
    throw std::invalid_argument("unknown family '" + s +
                                "' (use patch, kl, or schubert)");
}

GenericMatrix::GenericMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
    grid_.resize(static_cast<size_t>(rows) * cols);
}

const MatrixEntry& GenericMatrix::at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("matrix entry out of range");
    return grid_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
}

MatrixEntry& GenericMatrix::at(int i, int j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("matrix entry out of range");
    return grid_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
}

Polynomial GenericMatrix::entry(int i, int j) const {
    const MatrixEntry& e = at(i, j);
    switch (e.kind) {
        case MatrixEntry::Zero: return Polynomial();
        case MatrixEntry::One: return Polynomial(Int(1));
        case MatrixEntry::Variable: return Polynomial::variable(e.var);
    }
    throw std::logic_error("unknown entry kind");
}

std::vector<Var> GenericMatrix::variables() const {
    std::set<Var> vs;
    for (const auto& e : grid_)
        if (e.kind == MatrixEntry::Variable) vs.insert(e.var);
    return {vs.begin(), vs.end()};
}

std::vector<Var> GenericMatrix::east_variables() const {
    std::set<Var> vs;
    for (int i = 1; i <= rows_; ++i) {
        int one_col = 0;
        for (int j = 1; j <= cols_; ++j) {
            const MatrixEntry& e = at(i, j);
            if (e.kind == MatrixEntry::One) one_col = j;
            else if (e.kind == MatrixEntry::Variable && one_col > 0)
                vs.insert(e.var);
        }
    }
    return {vs.begin(), vs.end()};
}

std::vector<Var> GenericMatrix::west_variables() const {
    auto all = variables();
    auto east = east_variables();
    std::vector<Var> west;
    std::set_difference(all.begin(), all.end(), east.begin(), east.end(),
                        std::back_inserter(west));
    return west;
}

GenericMatrix variable_matrix(int rows, int cols) {
    GenericMatrix m(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            m.at(i, j) = {MatrixEntry::Variable, var(i, j)};
    return m;
}

GenericMatrix build_matrix(const Permutation& v, Convention c) {
    const int n = v.n();
    if (n == 0) throw std::invalid_argument("empty permutation");
    // The G/B+ matrix has the shape of the B_-\G KL matrix of w_0 * v, with
    // the same position-based variable names.
    Permutation p = (c == Convention::KLGmodBplus) ? Permutation::longest(n) * v : v;
    Permutation pinv = p.inverse();
    const bool kill_east = (c != Convention::PatchBminusG);

    GenericMatrix m(n, n);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            if (i == p(j)) m.at(i, j) = {MatrixEntry::One, {}};
            else if (i > p(j)) m.at(i, j) = {MatrixEntry::Zero, {}};
            else if (kill_east && pinv(i) < j) m.at(i, j) = {MatrixEntry::Zero, {}};
            else m.at(i, j) = {MatrixEntry::Variable, var(i, j)};
        }
    }
    return m;
}

GenericMatrix column_swap(const GenericMatrix& m, int b) {
    if (b < 1 || b + 1 > m.cols())
        throw std::invalid_argument("column swap index out of range");
    GenericMatrix s = m;
    for (int i = 1; i <= m.rows(); ++i)
        std::swap(s.at(i, b), s.at(i, b + 1));
    return s;
}

GenericMatrix kl_recursion_matrix(const Permutation& v, int b) {
    if (v(b) <= v(b + 1))
        throw std::invalid_argument("recursion matrix needs a descent of v");
    GenericMatrix m = build_matrix(v.times_s(b), Convention::KLBminusG);
    for (int i = 1; i <= m.rows(); ++i) {
        MatrixEntry& e = m.at(i, b + 1);
        if (e.kind == MatrixEntry::Variable && e.var.col == b + 1)
            e.var = var(e.var.row, b);
    }
    return m;
}

std::optional<Var> last_variable(const Permutation& v, Convention c) {
    if (c == Convention::KLGmodBplus) {
        auto b = v.last_ascent();
        if (!b) return std::nullopt;
        return var(v.n() - v(*b + 1) + 1, *b);
    }
    auto b = v.last_descent();
    if (!b) return std::nullopt;
    return var(v(*b + 1), *b);
}

TermOrder term_order_for(const Permutation& v, Convention c) {
    GenericMatrix m = build_matrix(v, c);
    auto ranking = column_major_ranking(m.west_variables());
    auto east = column_major_ranking(m.east_variables());
    ranking.insert(ranking.end(), east.begin(), east.end());
    return TermOrder(std::move(ranking));
}

GradingMap grading_for(const Permutation& v, Convention c) {
    const int n = v.n();
    GenericMatrix m = build_matrix(v, c);
    std::map<Var, std::vector<int>> degrees;
    std::vector<int> lam(n);
    if (c == Convention::KLGmodBplus) {
        for (Var x : m.variables()) {
            std::vector<int> d(n, 0);
            d[v(x.col) - 1] += 1;
            d[n - x.row] -= 1;
            degrees[x] = std::move(d);
        }
        for (int k = 1; k <= n; ++k) lam[k - 1] = n - k;
    } else {
        Permutation vinv = v.inverse();
        for (Var z : m.variables()) {
            std::vector<int> d(n, 0);
            d[vinv(z.row) - 1] += 1;
            d[z.col - 1] -= 1;
            degrees[z] = std::move(d);
        }
        for (int k = 1; k <= n; ++k) lam[k - 1] = n - v(k);
    }
    GradingMap g(n, std::move(degrees), std::move(lam));
    if (!g.is_positive())
        throw std::logic_error("matrix grading lost its positivity certificate");
    return g;
}

std::string render(const GenericMatrix& m, char letter) {
    std::vector<std::vector<std::string>> tok(m.rows());
    std::vector<size_t> width(m.cols(), 1);
    for (int i = 1; i <= m.rows(); ++i) {
        tok[i - 1].resize(m.cols());
        for (int j = 1; j <= m.cols(); ++j) {
            const MatrixEntry& e = m.at(i, j);
            std::string s = e.kind == MatrixEntry::Zero  ? "0"
                          : e.kind == MatrixEntry::One   ? "1"
                                                         : var_name(e.var, letter);
            width[j - 1] = std::max(width[j - 1], s.size());
            tok[i - 1][j - 1] = std::move(s);
        }
    }
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        out << "[ ";
        for (int j = 0; j < m.cols(); ++j) {
            out << std::string(width[j] - tok[i][j].size(), ' ') << tok[i][j];
            out << (j + 1 == m.cols() ? " ]\n" : "  ");
        }
    }
    return out.str();
}

}  // namespace schubert
