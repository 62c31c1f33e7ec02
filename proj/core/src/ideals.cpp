#include "schubert/ideals.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace schubert {

std::vector<Polynomial> GeneratorSet::polys() const {
    std::vector<Polynomial> ps;
    ps.reserve(gens.size());
    for (const auto& g : gens) ps.push_back(g.poly);
    return ps;
}

Polynomial minor_of(const GenericMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    std::vector<std::vector<Polynomial>> sub(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        sub[i].reserve(cols.size());
        for (int c : cols) sub[i].push_back(m.entry(rows[i], c));
    }
    return determinant(sub);
}

namespace {

std::vector<int> first_subset(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    return s;
}

// Advance a k-subset of {1..hi} in lexicographic order.
bool next_subset(std::vector<int>& s, int hi) {
    int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < hi - (k - 1 - i)) {
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// All size x size minors with rows from R and columns from C (both sorted),
// visited in lexicographic row-set then column-set order.
void for_each_minor(
    const GenericMatrix& m, const std::vector<int>& R, const std::vector<int>& C,
    int size,
    const std::function<void(Polynomial, const std::vector<int>&,
                             const std::vector<int>&)>& fn) {
    if (size < 1 || size > static_cast<int>(R.size()) ||
        size > static_cast<int>(C.size()))
        return;
    std::vector<int> rows(size), cols(size);
    auto ri = first_subset(size);
    do {
        for (int i = 0; i < size; ++i) rows[i] = R[ri[i] - 1];
        auto ci = first_subset(size);
        do {
            for (int i = 0; i < size; ++i) cols[i] = C[ci[i] - 1];
            fn(minor_of(m, rows, cols), rows, cols);
        } while (next_subset(ci, static_cast<int>(C.size())));
    } while (next_subset(ri, static_cast<int>(R.size())));
}

std::vector<int> range(int lo, int hi) {    // inclusive, empty when hi < lo
    std::vector<int> r;
    for (int i = lo; i <= hi; ++i) r.push_back(i);
    return r;
}

std::vector<int> range_without(int lo, int hi, int skip) {
    std::vector<int> r;
    for (int i = lo; i <= hi; ++i)
        if (i != skip) r.push_back(i);
    return r;
}

std::vector<int> erase_at(const std::vector<int>& s, int pos) {
    std::vector<int> r = s;
    r.erase(r.begin() + pos);
    return r;
}

// A generator is redundant when some row or column of its defining
// submatrix has every cofactor term absorbed by the others: each term is
// zero, or its entry is another kept generator, or its complementary minor
// is (always up to sign). The expansion along that line then rewrites the
// minor inside the ideal of the rest. The generator itself never serves as
// its own witness; x22 arises as the 2x2 minor of [x21 x22; 1 0] and must
// not be discharged against itself.
bool cofactor_redundant(const GenericMatrix& m, const Generator& g,
                        const std::set<Polynomial>& kept) {
    const std::vector<int>& R = g.from.rows;
    const std::vector<int>& C = g.from.cols;
    const int s = static_cast<int>(R.size());
    if (s < 2) return false;    // a 1x1 has no smaller cofactors

    auto witnessed = [&](const Polynomial& f) {
        if (f.is_zero()) return false;
        Polynomial c = f.canonical_up_to_sign();
        return c != g.poly && kept.count(c) > 0;
    };
    auto line_covered = [&](bool by_row, int k) {
        for (int l = 0; l < s; ++l) {
            int i = by_row ? k : l, j = by_row ? l : k;
            Polynomial e = m.entry(R[i], C[j]);
            if (e.is_zero()) continue;
            if (witnessed(e)) continue;
            if (witnessed(minor_of(m, erase_at(R, i), erase_at(C, j)))) continue;
            return false;
        }
        return true;
    };
    for (int k = 0; k < s; ++k)
        if (line_covered(true, k) || line_covered(false, k)) return true;
    return false;
}

// Drop cofactor-redundant minors one at a time, biggest first (ties by box,
// then row and column sets), rescanning after every removal so each drop is
// justified against the survivors only. Chained drops stay sound: unwinding
// the removals last-to-first rewrites every dropped minor over the final
// set, so the ideal never changes.
void prune_cofactor_redundant(GeneratorSet& out) {
    if (out.unit) return;
    std::set<Polynomial> kept;
    for (const Generator& g : out.gens) kept.insert(g.poly);

    for (bool removed = true; removed;) {
        removed = false;
        std::vector<size_t> scan(out.gens.size());
        for (size_t i = 0; i < scan.size(); ++i) scan[i] = i;
        std::sort(scan.begin(), scan.end(), [&](size_t a, size_t b) {
            const MinorProvenance& x = out.gens[a].from;
            const MinorProvenance& y = out.gens[b].from;
            if (x.rows.size() != y.rows.size()) return x.rows.size() > y.rows.size();
            return x < y;
        });
        for (size_t i : scan) {
            if (!cofactor_redundant(out.matrix, out.gens[i], kept)) continue;
            kept.erase(out.gens[i].poly);
            out.gens.erase(out.gens.begin() + static_cast<long>(i));
            removed = true;
            break;
        }
    }
}

}  // namespace

GeneratorSet ideal_generators(const GenericMatrix& m, const PartialPermutation& w,
                              bool essential_only) {
    if (w.rows() > m.rows() || w.cols() > m.cols())
        throw std::invalid_argument("rank-condition grid exceeds the matrix");
    std::vector<Cell> boxes;
    if (essential_only) {
        boxes = essential_set(rothe_diagram(w));
    } else {
        for (int p = 1; p <= w.rows(); ++p)
            for (int q = 1; q <= w.cols(); ++q) boxes.push_back({p, q});
    }
    RankTable rk = rank_table(w);

    GeneratorSet out;
    out.matrix = m;
    std::set<Polynomial> seen;
    for (Cell box : boxes) {
        int size = 1 + rk.at(box.row, box.col);

        // Cofactor-expand away leading 1s. While the block's first row
        // carries a 1, that column is e_1 of the block (everything below a
        // 1 is zero), so the size-t minors and the size-(t-1) minors of the
        // block without that row and column generate the same ideal, and
        // the smaller minors are a subset of the bigger ones up to sign.
        std::vector<int> rows = range(1, box.row), cols = range(1, box.col);
        std::vector<int> ones_rows, ones_cols;
        while (!rows.empty()) {
            int hit = 0;
            for (int c : cols)
                if (m.at(rows.front(), c).kind == MatrixEntry::One) {
                    hit = c;
                    break;
                }
            if (!hit) break;
            ones_rows.push_back(rows.front());
            ones_cols.push_back(hit);
            rows.erase(rows.begin());
            cols.erase(std::find(cols.begin(), cols.end(), hit));
        }

        int eff = size - static_cast<int>(ones_rows.size());
        if (eff <= 0) {
            // More forced 1s than the rank condition allows: the minor on
            // the first `size` stripped rows and their columns is +-1 and
            // the ideal is the whole ring.
            std::vector<int> wr(ones_rows.begin(), ones_rows.begin() + size);
            std::vector<int> wc(ones_cols.begin(), ones_cols.begin() + size);
            std::sort(wc.begin(), wc.end());
            Polynomial f = minor_of(m, wr, wc).canonical_up_to_sign();
            out.unit = true;
            if (seen.insert(f).second)
                out.gens.push_back({std::move(f), {box, std::move(wr), std::move(wc)}});
            continue;
        }

        for_each_minor(m, rows, cols, eff,
                       [&](Polynomial f, const std::vector<int>& mr,
                           const std::vector<int>& mc) {
                           f = f.canonical_up_to_sign();
                           if (f.is_zero()) return;
                           if (!seen.insert(f).second) return;
                           if (f.is_nonzero_constant()) out.unit = true;
                           out.gens.push_back({std::move(f), {box, mr, mc}});
                       });
    }
    prune_cofactor_redundant(out);
    return out;
}

GeneratorSet patch_ideal(const Permutation& v, const Permutation& w,
                         bool essential_only) {
    if (v.n() != w.n()) throw std::invalid_argument("permutation sizes differ");
    return ideal_generators(build_matrix(v, Convention::PatchBminusG),
                            PartialPermutation(w), essential_only);
}

GeneratorSet kl_ideal(const Permutation& v, const Permutation& w, Convention c,
                      bool essential_only) {
    if (v.n() != w.n()) throw std::invalid_argument("permutation sizes differ");
    if (c == Convention::PatchBminusG)
        throw std::invalid_argument("kl_ideal needs one of the KL conventions");
    Permutation rw =
        (c == Convention::KLGmodBplus) ? Permutation::longest(w.n()) * w : w;
    return ideal_generators(build_matrix(v, c), PartialPermutation(rw),
                            essential_only);
}

GeneratorSet schubert_ideal(const PartialPermutation& w, bool essential_only) {
    return ideal_generators(variable_matrix(w.rows(), w.cols()), w, essential_only);
}

GeneratorSet t_ideal(const Permutation& v, const Permutation& w, TTarget target,
                     bool essential_only) {
    if (v.n() != w.n()) throw std::invalid_argument("permutation sizes differ");
    auto b = v.last_descent();
    if (!b) throw std::invalid_argument("t_ideal needs a v with a descent");
    GenericMatrix m = column_swap(build_matrix(v, Convention::PatchBminusG), *b);
    Permutation tw = (target == TTarget::SwappedW) ? w.times_s(*b) : w;
    return ideal_generators(m, PartialPermutation(tw), essential_only);
}

GeneratorSet l_ideal(const Permutation& v, const Permutation& w, TTarget target,
                     bool essential_only) {
    if (v.n() != w.n()) throw std::invalid_argument("permutation sizes differ");
    auto b = v.last_descent();
    if (!b) throw std::invalid_argument("l_ideal needs a v with a descent");
    GenericMatrix m = kl_recursion_matrix(v, *b);
    Permutation tw = (target == TTarget::SwappedW) ? w.times_s(*b) : w;
    return ideal_generators(m, PartialPermutation(tw), essential_only);
}

Polynomial phi_substitute(const Polynomial& f, int b) {
    return f.rename_vars([b](Var x) {
        if (x.col == b) return var(x.row, b + 1);
        if (x.col == b + 1) return var(x.row, b);
        return x;
    });
}

Polynomial set_y_to_zero(const Polynomial& f, const Permutation& v) {
    return f.zero_vars(
        build_matrix(v, Convention::PatchBminusG).east_variables());
}

ZmaxSplit split_by_zmax(const std::vector<Polynomial>& gens, Var y) {
    ZmaxSplit out;
    out.y = y;
    for (const Polynomial& f : gens) {
        if (!f.involves(y)) {
            out.h.push_back(f);
            continue;
        }
        auto [g, r] = f.split_linear(y);
        out.gr.emplace_back(std::move(g), std::move(r));
    }
    return out;
}

std::vector<int> n_alpha_rows(const Permutation& v, const Permutation& w) {
    std::vector<int> rows;
    auto b = v.last_descent();
    if (!b || w(*b) <= w(*b + 1)) return rows;
    int a = v(*b + 1);
    for (Cell c : essential_set(rothe_diagram(w)))
        if (c.col == *b && c.row >= a) rows.push_back(c.row);
    return rows;
}

std::vector<Polynomial> n_alpha_b(const Permutation& v, const Permutation& w,
                                  int alpha) {
    auto b = v.last_descent();
    if (!b) throw std::invalid_argument("v has no descent");
    if (w(*b) <= w(*b + 1))
        throw std::invalid_argument("the last descent of v is not a descent of w");
    auto ok = n_alpha_rows(v, w);
    if (std::find(ok.begin(), ok.end(), alpha) == ok.end())
        throw std::invalid_argument("(alpha, b) is not an eligible essential box");
    int a = v(*b + 1);

    GenericMatrix z = build_matrix(v, Convention::PatchBminusG);
    int size = 1 + rank_table(PartialPermutation(w)).at(alpha, *b);

    std::set<Polynomial> seen;
    std::vector<Polynomial> out;
    auto keep = [&](Polynomial f, const std::vector<int>&, const std::vector<int>&) {
        f = f.canonical_up_to_sign();
        if (f.is_zero()) return;
        if (seen.insert(f).second) out.push_back(std::move(f));
    };
    for_each_minor(z, range_without(1, alpha, a), range(1, *b), size, keep);
    for_each_minor(z, range(1, alpha), range(1, *b - 1), size, keep);
    return out;
}

std::pair<Permutation, Permutation> embed_schubert(const Permutation& w) {
    const int n = w.n();
    std::vector<int> vwin(2 * n), wwin(2 * n);
    for (int i = 1; i <= n; ++i) {
        vwin[i - 1] = n + i;
        vwin[n + i - 1] = i;
        wwin[i - 1] = w(i);
        wwin[n + i - 1] = n + i;
    }
    return {Permutation(std::move(vwin)), Permutation(std::move(wwin))};
}

}  // namespace schubert
