#include "schubert/groebner.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace schubert {

namespace {

using boost::multiprecision::gcd;

// Term list sorted descending under the active order. All the division
// arithmetic happens on this representation; Polynomial's structural order
// is only restored at the boundaries.
struct OPoly {
    std::vector<Term> t;

    bool zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().mono; }
    const Int& lc() const { return t.front().coef; }
};

OPoly to_opoly(const Polynomial& f, const TermOrder& ord) {
    OPoly p;
    p.t = f.terms();
    std::sort(p.t.begin(), p.t.end(), [&](const Term& x, const Term& y) {
        return ord.greater(x.mono, y.mono);
    });
    return p;
}

Polynomial to_poly(const OPoly& p) { return Polynomial(p.t); }

void make_primitive(OPoly& f) {
    if (f.zero()) return;
    Int c = 0;
    for (const Term& t : f.t) c = gcd(c, abs(t.coef));
    if (f.lc() < 0) c = -c;
    if (c == 1) return;
    for (Term& t : f.t) t.coef /= c;
}

// a * ma * f + b * mb * g, merged in descending order.
OPoly combine(const Int& a, const Monomial& ma, const OPoly& f, const Int& b,
              const Monomial& mb, const OPoly& g, const TermOrder& ord) {
    OPoly r;
    r.t.reserve(f.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < f.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            r.t.push_back({f.t[i].mono * ma, f.t[i].coef * a});
            ++i;
            continue;
        }
        if (i == f.t.size()) {
            r.t.push_back({g.t[j].mono * mb, g.t[j].coef * b});
            ++j;
            continue;
        }
        Monomial mf = f.t[i].mono * ma;
        Monomial mg = g.t[j].mono * mb;
        auto cmp = ord.compare(mf, mg);
        if (cmp == std::strong_ordering::greater) {
            r.t.push_back({std::move(mf), f.t[i].coef * a});
            ++i;
        } else if (cmp == std::strong_ordering::less) {
            r.t.push_back({std::move(mg), g.t[j].coef * b});
            ++j;
        } else {
            Int c = f.t[i].coef * a + g.t[j].coef * b;
            if (c != 0) r.t.push_back({std::move(mf), std::move(c)});
            ++i, ++j;
        }
    }
    return r;
}

const Monomial kOne{};

// Full gcd-scaled division. Monomials already checked (everything before
// pos) stay irreducible under the scalings, so the scan never backs up.
OPoly reduce_full(OPoly f, const std::vector<OPoly>& basis, const TermOrder& ord) {
    size_t pos = 0;
    while (pos < f.t.size()) {
        const OPoly* red = nullptr;
        for (const OPoly& b : basis) {
            if (!b.zero() && b.lm().divides(f.t[pos].mono)) {
                red = &b;
                break;
            }
        }
        if (!red) {
            ++pos;
            continue;
        }
        Int g = gcd(red->lc(), f.t[pos].coef);
        Int a = red->lc() / g;     // scale on f
        Int b = f.t[pos].coef / g; // scale on the reducer
        if (a < 0) { a = -a; b = -b; }
        Monomial q = f.t[pos].mono.divide_by(red->lm());
        f = combine(a, kOne, f, -b, q, *red, ord);
    }
    make_primitive(f);
    return f;
}

OPoly spoly(const OPoly& f, const OPoly& g, const TermOrder& ord) {
    Monomial L = lcm(f.lm(), g.lm());
    Monomial qf = L.divide_by(f.lm());
    Monomial qg = L.divide_by(g.lm());
    Int d = gcd(f.lc(), g.lc());
    return combine(g.lc() / d, qf, f, -(f.lc() / d), qg, g, ord);
}

std::vector<OPoly> to_opolys(const std::vector<Polynomial>& gens,
                             const TermOrder& ord) {
    std::vector<OPoly> out;
    out.reserve(gens.size());
    for (const Polynomial& f : gens) {
        if (f.is_zero()) continue;
        OPoly p = to_opoly(f, ord);
        make_primitive(p);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& order) {
    if (f.is_zero()) return f;
    return to_poly(reduce_full(to_opoly(f, order), to_opolys(basis, order), order));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.polys, gb.order);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order,
                         const BuchbergerOptions& opt) {
    std::vector<OPoly> G = to_opolys(gens, order);

    struct Pair {
        Monomial l;
        int i, j;
    };
    auto cmp = [&order](const Pair& a, const Pair& b) {
        auto c = order.compare(a.l, b.l);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::set<Pair, decltype(cmp)> queue(cmp);
    auto push_pairs = [&](int k) {
        for (int i = 0; i < k; ++i)
            queue.insert({lcm(G[i].lm(), G[k].lm()), i, k});
    };
    for (int k = 1; k < static_cast<int>(G.size()); ++k) push_pairs(k);

    std::size_t popped = 0;
    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        if (++popped > opt.pair_limit)
            throw GroebnerLimit("S-pair budget of " + std::to_string(opt.pair_limit) +
                                " exhausted with " + std::to_string(G.size()) +
                                " basis elements");
        if (coprime(G[p.i].lm(), G[p.j].lm())) continue;
        OPoly r = reduce_full(spoly(G[p.i], G[p.j], order), G, order);
        if (r.zero()) continue;
        G.push_back(std::move(r));
        push_pairs(static_cast<int>(G.size()) - 1);
    }

    // Minimalize: on a completed basis, an element whose lead another lead
    // divides is redundant.
    std::vector<OPoly> minimal;
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(G.size()); ++i) {
        bool redundant = false;
        for (int j = 0; j < static_cast<int>(G.size()) && !redundant; ++j) {
            if (i == j) continue;
            if (!G[j].lm().divides(G[i].lm())) continue;
            // Equal leads: keep the earlier one.
            redundant = !(G[i].lm() == G[j].lm()) || j < i;
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Tail-reduce each element against the others. Leads are pairwise
    // non-divisible, so only tails change and one pass settles everything.
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = reduce_full(std::move(minimal[i]), others, order);
    }

    std::sort(minimal.begin(), minimal.end(), [&](const OPoly& a, const OPoly& b) {
        return order.greater(a.lm(), b.lm());
    });

    GroebnerBasis out{order, {}};
    out.polys.reserve(minimal.size());
    for (const OPoly& p : minimal) out.polys.push_back(to_poly(p));
    return out;
}

GroebnerCheck is_groebner(const std::vector<Polynomial>& gens,
                          const TermOrder& order) {
    std::vector<std::pair<int, OPoly>> G;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        if (gens[i].is_zero()) continue;
        OPoly p = to_opoly(gens[i], order);
        make_primitive(p);
        G.emplace_back(i, std::move(p));
    }
    std::vector<OPoly> basis;
    basis.reserve(G.size());
    for (auto& [i, p] : G) basis.push_back(p);

    GroebnerCheck out;
    for (size_t a = 0; a < G.size(); ++a) {
        for (size_t b = a + 1; b < G.size(); ++b) {
            if (coprime(G[a].second.lm(), G[b].second.lm())) {
                ++out.pairs_coprime;
                continue;
            }
            ++out.pairs_reduced;
            OPoly r =
                reduce_full(spoly(G[a].second, G[b].second, order), basis, order);
            if (!r.zero()) {
                out.ok = false;
                out.failures.push_back({G[a].first, G[b].first, to_poly(r)});
            }
        }
    }
    return out;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            redundant = i != j && !(gens[j] == gens[i]) && gens[j].divides(gens[i]);
        if (!redundant) gens_.push_back(gens[i]);
    }
}

bool MonomialIdeal::unit() const {
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& o) const {
    std::vector<Monomial> g = gens_;
    g.insert(g.end(), o.gens_.begin(), o.gens_.end());
    return MonomialIdeal(std::move(g));
}

MonomialIdeal MonomialIdeal::times(const Monomial& m) const {
    std::vector<Monomial> g;
    g.reserve(gens_.size());
    for (const Monomial& x : gens_) g.push_back(x * m);
    return MonomialIdeal(std::move(g));
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> lms;
    lms.reserve(gb.polys.size());
    for (const Polynomial& f : gb.polys)
        if (!f.is_zero()) lms.push_back(f.leading_monomial(gb.order));
    return MonomialIdeal(std::move(lms));
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

bool ideal_contains(const GroebnerBasis& gb, const std::vector<Polynomial>& sub) {
    return std::all_of(sub.begin(), sub.end(),
                       [&](const Polynomial& f) { return in_ideal(f, gb); });
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const TermOrder& order) {
    GroebnerBasis ga = buchberger(a, order);
    GroebnerBasis gb = buchberger(b, order);
    // Reduced bases are canonical, but the cheap memberwise comparison only
    // works when both used the same order; it did, so compare directly.
    return ga.polys == gb.polys;
}

bool is_homogeneous(const std::vector<Polynomial>& gens, const GradingMap& g) {
    return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& f) {
        return multidegree(f, g).kind != Multidegree::Kind::inhomogeneous;
    });
}

std::vector<Polynomial> graded_components(const Polynomial& f, const GradingMap& g) {
    std::map<std::vector<int>, std::vector<Term>> buckets;
    for (const Term& t : f.terms())
        buckets[g.monomial_degree(t.mono)].push_back(t);
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& [deg, terms] : buckets) out.emplace_back(std::move(terms));
    return out;
}

bool ideal_is_homogeneous(const std::vector<Polynomial>& gens, const GradingMap& g,
                          const TermOrder& order, const BuchbergerOptions& opt) {
    if (is_homogeneous(gens, g)) return true;
    GroebnerBasis gb = buchberger(gens, order, opt);
    for (const Polynomial& f : gens)
        for (const Polynomial& comp : graded_components(f, g))
            if (!normal_form(comp, gb).is_zero()) return false;
    return true;
}

}  // namespace schubert
