#include "schubert/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace schubert {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : window_) {
        if (x < 1 || x > n || seen[x])
            throw std::invalid_argument("window is not a permutation of 1..n");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size())
                throw std::invalid_argument("bad permutation token '" + tok + "'");
            w.push_back(v);
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(std::string("bad digit '") + c +
                                            "' in one-line notation");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int j = 1; j <= n(); ++j)
        if ((*this)(j) != j) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(window_.size());
    for (int j = 1; j <= n(); ++j) inv[(*this)(j)-1] = j;
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& v) const {
    if (n() != v.n()) throw std::invalid_argument("size mismatch in product");
    std::vector<int> w(window_.size());
    for (int i = 1; i <= n(); ++i) w[i - 1] = (*this)(v(i));
    return Permutation(std::move(w));
}

Permutation Permutation::times_s(int b) const {
    if (b < 1 || b >= n()) throw std::invalid_argument("s_b out of range");
    std::vector<int> w = window_;
    std::swap(w[b - 1], w[b]);
    return Permutation(std::move(w));
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (int i = 1; i < n(); ++i)
        if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
    return d;
}

std::vector<int> Permutation::ascents() const {
    std::vector<int> a;
    for (int i = 1; i < n(); ++i)
        if ((*this)(i) < (*this)(i + 1)) a.push_back(i);
    return a;
}

std::optional<int> Permutation::last_descent() const {
    auto d = descents();
    if (d.empty()) return std::nullopt;
    return d.back();
}

std::optional<int> Permutation::last_ascent() const {
    auto a = ascents();
    if (a.empty()) return std::nullopt;
    return a.back();
}

std::string Permutation::str() const {
    bool wide = n() > 9;
    std::string out;
    for (int j = 1; j <= n(); ++j) {
        if (wide && j > 1) out += ',';
        out += std::to_string((*this)(j));
    }
    return out;
}

PartialPermutation::PartialPermutation(int rows, int cols, std::vector<Cell> ones)
    : rows_(rows), cols_(cols), ones_(std::move(ones)) {
    std::sort(ones_.begin(), ones_.end());
    std::vector<char> row_used(rows_ + 1, 0), col_used(cols_ + 1, 0);
    for (const Cell& c : ones_) {
        if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_)
            throw std::invalid_argument("cell out of grid");
        if (row_used[c.row]++ || col_used[c.col]++)
            throw std::invalid_argument("two 1s share a row or column");
    }
}

PartialPermutation::PartialPermutation(const Permutation& w)
    : rows_(w.n()), cols_(w.n()) {
    for (int j = 1; j <= w.n(); ++j) ones_.push_back({w(j), j});
    std::sort(ones_.begin(), ones_.end());
}

bool PartialPermutation::has_one(int row, int col) const {
    return std::binary_search(ones_.begin(), ones_.end(), Cell{row, col});
}

std::optional<int> PartialPermutation::one_in_row(int row) const {
    for (const Cell& c : ones_)
        if (c.row == row) return c.col;
    return std::nullopt;
}

std::optional<int> PartialPermutation::one_in_col(int col) const {
    for (const Cell& c : ones_)
        if (c.col == col) return c.row;
    return std::nullopt;
}

Diagram::Diagram(std::vector<Cell> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
}

bool Diagram::contains(Cell c) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), c);
}

Diagram rothe_diagram(const PartialPermutation& w) {
    std::vector<Cell> boxes;
    for (int i = 1; i <= w.rows(); ++i) {
        auto jr = w.one_in_row(i);
        for (int j = 1; j <= w.cols(); ++j) {
            if (jr && *jr <= j) continue;               // 1 weakly west in row i
            auto ic = w.one_in_col(j);
            if (ic && *ic <= i) continue;               // 1 weakly north in col j
            boxes.push_back({i, j});
        }
    }
    return Diagram(std::move(boxes));
}

Diagram rothe_diagram(const Permutation& w) {
    return rothe_diagram(PartialPermutation(w));
}

std::vector<Cell> essential_set(const Diagram& d) {
    std::vector<Cell> ess;
    for (const Cell& b : d.boxes())
        if (!d.contains({b.row, b.col + 1}) && !d.contains({b.row + 1, b.col}))
            ess.push_back(b);
    return ess;
}

RankTable::RankTable(int rows, int cols)
    : rows_(rows), cols_(cols), r_(static_cast<size_t>(rows) * cols, 0) {}

RankTable rank_table(const PartialPermutation& w) {
    RankTable t(w.rows(), w.cols());
    for (int p = 1; p <= w.rows(); ++p)
        for (int q = 1; q <= w.cols(); ++q) {
            int above = p > 1 ? t.at(p - 1, q) : 0;
            int left = q > 1 ? t.at(p, q - 1) : 0;
            int corner = (p > 1 && q > 1) ? t.at(p - 1, q - 1) : 0;
            t.at(p, q) = above + left - corner + (w.has_one(p, q) ? 1 : 0);
        }
    return t;
}

RankTable rank_table(const Permutation& w) {
    return rank_table(PartialPermutation(w));
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw std::invalid_argument("size mismatch in Bruhat test");
    RankTable rv = rank_table(v), rw = rank_table(w);
    for (int p = 1; p <= v.n(); ++p)
        for (int q = 1; q <= v.n(); ++q)
            if (rv.at(p, q) < rw.at(p, q)) return false;
    return true;
}

std::vector<PatternTriple> find_patterns(const Permutation& w, PatternKind kind) {
    // One triple per witnessing (i2, i3) pair, with the nearest i1.  Counting
    // every i1 separately would list 143 alongside 243 in 1243; the convention
    // here reports the single pattern 243.
    std::map<std::pair<int, int>, PatternTriple> best;
    const int n = w.n();
    for (int i1 = 1; i1 <= n; ++i1)
        for (int i2 = i1 + 1; i2 <= n; ++i2)
            for (int i3 = i2 + 1; i3 <= n; ++i3) {
                int a = w(i1), b = w(i2), c = w(i3);
                bool hit = false;
                switch (kind) {
                    case PatternKind::p321: hit = c < b && b < a; break;
                    case PatternKind::p231: hit = c < a && a < b; break;
                    case PatternKind::p132: hit = a < c && c < b; break;
                }
                if (hit) best[{i2, i3}] = {i1, i2, i3, a, b, c, kind};
            }
    std::vector<PatternTriple> out;
    for (auto& [key, t] : best) out.push_back(t);
    std::sort(out.begin(), out.end(), [](const PatternTriple& s, const PatternTriple& t) {
        return std::tie(s.i1, s.i2, s.i3) < std::tie(t.i1, t.i2, t.i3);
    });
    return out;
}

bool avoids(const Permutation& w, PatternKind kind) {
    return find_patterns(w, kind).empty();
}

Diagram diagram_move(const Permutation& w, int b) {
    auto d = w.descents();
    if (std::find(d.begin(), d.end(), b) == d.end())
        throw std::invalid_argument("diagram_move: b is not a descent of w");
    const int pivot_row = w(b + 1);
    std::vector<Cell> boxes;
    for (const Cell& c : rothe_diagram(w).boxes()) {
        if (c.col != b) {
            boxes.push_back(c);
        } else if (c.row < pivot_row) {
            boxes.push_back(c);
        } else if (c.row == pivot_row) {
            // deleted: this is the box at (w(b+1), b)
        } else {
            boxes.push_back({c.row, b + 1});
        }
    }
    return Diagram(std::move(boxes));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace schubert
