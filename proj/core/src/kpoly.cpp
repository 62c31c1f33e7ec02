#include "schubert/kpoly.hpp"

#include "schubert/ideals.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace schubert {

namespace {

void require_positive(const GradingMap& g) {
    if (!g.is_positive())
        throw std::invalid_argument("K-polynomial needs a positively graded ring");
}

}  // namespace

LaurentKPolynomial kpoly_inclusion_exclusion(const MonomialIdeal& ideal,
                                             const GradingMap& g,
                                             int max_generators) {
    require_positive(g);
    const auto& gens = ideal.gens();
    if (static_cast<int>(gens.size()) > max_generators)
        throw ComplexityLimit("inclusion-exclusion over " + std::to_string(gens.size()) +
                              " generators (budget " + std::to_string(max_generators) + ")");
    std::map<std::vector<int>, Int> acc;
    // Sum over generator subsets S of (-1)^|S| t^(deg lcm S).
    std::function<void(size_t, const Monomial&, int)> walk = [&](size_t i, const Monomial& l,
                                                                 int sign) {
        if (i == gens.size()) {
            acc[g.monomial_degree(l)] += sign;
            return;
        }
        walk(i + 1, l, sign);
        walk(i + 1, lcm(l, gens[i]), -sign);
    };
    walk(0, Monomial(), 1);
    return LaurentKPolynomial::from_map(std::move(acc));
}

namespace {

LaurentKPolynomial coprime_product(const std::vector<Monomial>& gens, const GradingMap& g) {
    LaurentKPolynomial k = LaurentKPolynomial::one(g.dim());
    for (const auto& m : gens)
        k = k * LaurentKPolynomial::one_minus_t(g.monomial_degree(m));
    return k;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!coprime(gens[i], gens[j])) return false;
    return true;
}

// Partition the generators into variable-disjoint groups.
std::vector<std::vector<Monomial>> components(const std::vector<Monomial>& gens) {
    std::vector<int> parent(gens.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!coprime(gens[i], gens[j])) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    std::map<int, std::vector<Monomial>> groups;
    for (size_t i = 0; i < gens.size(); ++i)
        groups[find(static_cast<int>(i))].push_back(gens[i]);
    std::vector<std::vector<Monomial>> out;
    for (auto& [root, group] : groups) out.push_back(std::move(group));
    return out;
}

}  // namespace

LaurentKPolynomial kpoly_pivot(const MonomialIdeal& ideal, const GradingMap& g) {
    require_positive(g);
    std::map<std::vector<Monomial>, LaurentKPolynomial> memo;
    std::function<LaurentKPolynomial(const MonomialIdeal&)> eval =
        [&](const MonomialIdeal& id) -> LaurentKPolynomial {
        if (id.unit()) return LaurentKPolynomial();
        if (id.zero()) return LaurentKPolynomial::one(g.dim());
        const auto& gens = id.gens();
        // Complete intersection shortcut. Besides speed this guarantees the
        // pivot below is shared by two generators: if every variable sat in
        // at most one generator we would not get here, and a shared variable
        // cannot itself be a minimal generator. Both branches then strictly
        // shrink the total degree, so the recursion terminates.
        if (pairwise_coprime(gens)) return coprime_product(gens, g);
        auto it = memo.find(gens);
        if (it != memo.end()) return it->second;
        LaurentKPolynomial k;
        auto groups = components(gens);
        if (groups.size() > 1) {
            k = LaurentKPolynomial::one(g.dim());
            for (auto& group : groups) k = k * eval(MonomialIdeal(std::move(group)));
        } else {
            std::map<Var, int> freq;
            for (const auto& m : gens)
                for (Var x : m.support()) ++freq[x];
            Var pivot = freq.begin()->first;
            int best = 0;
            for (auto& [x, c] : freq)
                if (c > best) { best = c; pivot = x; }
            Monomial xm = Monomial::variable(pivot);
            std::vector<Monomial> plus{xm}, colon;
            for (const auto& m : gens) {
                if (m.exponent_of(pivot) == 0) plus.push_back(m);
                colon.push_back(m.exponent_of(pivot) > 0 ? m.divide_by(xm) : m);
            }
            // K(I) = K(I + <x>) + t^(deg x) K(I : x), from the exact sequence
            // multiplying by x.
            k = eval(MonomialIdeal(std::move(plus))) +
                eval(MonomialIdeal(std::move(colon))).shifted(g.degree(pivot));
        }
        memo.emplace(gens, k);
        return k;
    };
    return eval(ideal);
}

LaurentKPolynomial kpoly_monomial(const MonomialIdeal& ideal, const GradingMap& g,
                                  const KPolyOptions& opt) {
    require_positive(g);
    LaurentKPolynomial k = kpoly_pivot(ideal, g);
    if (static_cast<int>(ideal.gens().size()) <= opt.ie_max_generators) {
        LaurentKPolynomial check = kpoly_inclusion_exclusion(ideal, g, opt.ie_max_generators);
        if (!(k == check))
            throw std::logic_error("K-polynomial algorithms disagree: pivot " + k.str() +
                                   " vs inclusion-exclusion " + check.str());
    }
    return k;
}

LaurentKPolynomial kpoly_ideal(const std::vector<Polynomial>& gens, const TermOrder& order,
                               const GradingMap& g, const KPolyOptions& opt) {
    require_positive(g);
    if (!is_homogeneous(gens, g))
        throw std::invalid_argument("K-polynomial of an inhomogeneous ideal");
    GroebnerBasis gb = buchberger(gens, order, opt.buchberger);
    LaurentKPolynomial k = kpoly_monomial(initial_ideal(gb), g, opt);
    std::vector<Var> reversed = order.ranking();
    std::reverse(reversed.begin(), reversed.end());
    GroebnerBasis gb2 = buchberger(gens, TermOrder(std::move(reversed)), opt.buchberger);
    LaurentKPolynomial k2 = kpoly_monomial(initial_ideal(gb2), g, opt);
    if (!(k == k2))
        throw std::logic_error("initial ideals under opposite orders disagree: " + k.str() +
                               " vs " + k2.str());
    return k;
}

std::map<std::vector<int>, Int> hilbert_slice(const MonomialIdeal& ideal, const GradingMap& g,
                                              int bound) {
    GradingMap fine = g.refined_with_total_degree();
    std::vector<Var> vars = g.variables();
    std::map<std::vector<int>, Int> acc;
    std::function<void(size_t, const Monomial&, int)> walk = [&](size_t i, const Monomial& m,
                                                                 int deg) {
        if (ideal.contains(m)) return;    // every multiple is in the ideal too
        if (i == vars.size()) {
            acc[fine.monomial_degree(m)] += 1;
            return;
        }
        walk(i + 1, m, deg);
        Monomial cur = m;
        for (int e = 1; deg + e <= bound; ++e) {
            cur = cur * Monomial::variable(vars[i]);
            walk(i + 1, cur, deg + e);
        }
    };
    walk(0, Monomial(), 0);
    return acc;
}

std::map<std::vector<int>, Int> hilbert_expansion(const MonomialIdeal& ideal,
                                                  const GradingMap& g, int bound) {
    GradingMap fine = g.refined_with_total_degree();
    LaurentKPolynomial k = kpoly_monomial(ideal, fine);
    int last = fine.dim() - 1;
    std::map<std::vector<int>, Int> cur;
    for (const auto& [e, c] : k.terms())
        if (e[last] <= bound) cur[e] = c;
    // Multiply by the geometric series of every variable; the total-degree
    // coordinate of a variable is 1 and never decreases, so truncating past
    // the bound at each step loses nothing visible in the slice.
    for (Var x : fine.variables()) {
        const std::vector<int>& e = fine.degree(x);
        std::map<std::vector<int>, Int> next;
        for (const auto& [d, c] : cur) {
            std::vector<int> shifted = d;
            for (int k2 = d[last]; k2 <= bound; ++k2) {
                next[shifted] += c;
                for (int i = 0; i <= last; ++i) shifted[i] += e[i];
            }
        }
        cur = std::move(next);
    }
    for (auto it = cur.begin(); it != cur.end();)
        it = it->second == 0 ? cur.erase(it) : std::next(it);
    return cur;
}

KostantReport verify_kostant(const Permutation& v, const Permutation& w, Convention c,
                             const KPolyOptions& opt) {
    if (v.n() != w.n()) throw std::invalid_argument("permutation sizes differ");
    if (c == Convention::KLBminusG)
        throw std::invalid_argument(
            "the K-polynomial recursion applies to PatchBminusG and KLGmodBplus");
    KostantReport rep;
    rep.convention = c;
    if (c == Convention::PatchBminusG) {
        auto b = v.last_descent();
        if (!b) {
            rep.reason = "v has no descent";
            return rep;
        }
        rep.applicable = true;
        rep.b = *b;
        GradingMap g = grading_for(v, c);
        TermOrder ord = term_order_for(v, c);
        rep.kI = kpoly_ideal(patch_ideal(v, w).polys(), ord, g, opt);
        rep.kJ = kpoly_ideal(t_ideal(v, w, TTarget::SameW).polys(), ord, g, opt);
        rep.case_one = w(rep.b) < w(rep.b + 1);
        rep.lhs = rep.kI;
        if (rep.case_one) {
            rep.rhs = rep.kJ;
        } else {
            rep.kN = kpoly_ideal(t_ideal(v, w, TTarget::SwappedW).polys(), ord, g, opt);
            rep.shift = g.degree(*last_variable(v, c));
            rep.rhs = rep.kJ + LaurentKPolynomial::one_minus_t(rep.shift) * (rep.kN - rep.kJ);
        }
        rep.equal = rep.lhs == rep.rhs;
        return rep;
    }
    auto b = v.last_ascent();
    if (!b) {
        rep.reason = "v has no ascent";
        return rep;
    }
    rep.applicable = true;
    rep.b = *b;
    Permutation vb = v.times_s(*b);
    GradingMap gI = grading_for(v, c), gJ = grading_for(vb, c);
    TermOrder oI = term_order_for(v, c), oJ = term_order_for(vb, c);
    rep.kI = kpoly_ideal(kl_ideal(v, w, c).polys(), oI, gI, opt);
    rep.kJ = kpoly_ideal(kl_ideal(vb, w, c).polys(), oJ, gJ, opt);
    rep.case_one = w(rep.b) > w(rep.b + 1);
    rep.lhs = rep.kI;
    if (rep.case_one) {
        rep.rhs = rep.kJ;
    } else {
        rep.kN = kpoly_ideal(kl_ideal(vb, w.times_s(rep.b), c).polys(), oJ, gJ, opt);
        rep.shift = gI.degree(*last_variable(v, c));
        rep.rhs = rep.kJ + LaurentKPolynomial::one_minus_t(rep.shift) * (rep.kN - rep.kJ);
    }
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace schubert
