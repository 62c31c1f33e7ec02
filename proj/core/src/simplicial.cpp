#include "schubert/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace schubert {

namespace {

// Drop masks contained in another mask; sort and dedup.
std::vector<std::uint32_t> maximalize(std::vector<std::uint32_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint32_t> out;
    for (size_t i = 0; i < masks.size(); ++i) {
        bool covered = false;
        for (size_t j = 0; j < masks.size() && !covered; ++j)
            covered = i != j && (masks[i] & masks[j]) == masks[i] &&
                      masks[i] != masks[j];
        if (!covered) out.push_back(masks[i]);
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_squarefree(
    const MonomialIdeal& ideal, const std::vector<Var>& vertices,
    std::size_t subset_limit) {
    if (!ideal.is_squarefree())
        throw std::invalid_argument("Stanley-Reisner complex needs a squarefree ideal");
    std::vector<Var> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const int n = static_cast<int>(vs.size());
    if (n > 31 || (std::size_t{1} << n) > subset_limit)
        throw ComplexityLimit("vertex set of size " + std::to_string(n) +
                              " exceeds the subset enumeration budget");

    std::vector<std::uint32_t> supports;
    for (const Monomial& g : ideal.gens()) {
        std::uint32_t m = 0;
        for (Var v : g.support()) {
            auto it = std::lower_bound(vs.begin(), vs.end(), v);
            if (it == vs.end() || !(*it == v))
                throw std::invalid_argument("ideal generator uses variable " +
                                            var_name(v) + " outside the vertex set");
            m |= std::uint32_t{1} << (it - vs.begin());
        }
        supports.push_back(m);
    }

    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<char> face(total, 1);
    for (std::uint32_t s = 0; s < total; ++s)
        for (std::uint32_t g : supports)
            if ((g & s) == g) {
                face[s] = 0;
                break;
            }

    std::vector<std::uint32_t> facets;
    for (std::uint32_t s = 0; s < total; ++s) {
        if (!face[s]) continue;
        bool maximal = true;
        for (int k = 0; k < n && maximal; ++k)
            maximal = (s >> k & 1) || !face[s | (std::uint32_t{1} << k)];
        if (maximal) facets.push_back(s);
    }

    SimplicialComplex c;
    c.vertices_ = std::move(vs);
    c.facets_ = std::move(facets);    // already sorted and maximal
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::uint32_t> facets,
                                                 std::vector<Var> vertices) {
    SimplicialComplex c;
    c.vertices_ = std::move(vertices);
    c.facets_ = maximalize(std::move(facets));
    return c;
}

bool SimplicialComplex::is_empty_complex() const {
    return facets_.size() == 1 && facets_.front() == 0;
}

int SimplicialComplex::dim() const {
    if (facets_.empty()) return -2;
    int best = 0;
    for (std::uint32_t f : facets_) best = std::max(best, std::popcount(f));
    return best - 1;
}

bool SimplicialComplex::is_pure() const {
    for (std::uint32_t f : facets_)
        if (std::popcount(f) != std::popcount(facets_.front())) return false;
    return true;
}

bool SimplicialComplex::is_simplex() const { return facets_.size() == 1; }

bool SimplicialComplex::is_face(std::uint32_t mask) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](std::uint32_t f) {
        return (mask & f) == mask;
    });
}

std::vector<int> SimplicialComplex::active_vertices() const {
    std::uint32_t all = 0;
    for (std::uint32_t f : facets_) all |= f;
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(vertices_.size()); ++k)
        if (all >> k & 1) out.push_back(k);
    return out;
}

SimplicialComplex SimplicialComplex::link(int vertex_index) const {
    const std::uint32_t bit = std::uint32_t{1} << vertex_index;
    std::vector<std::uint32_t> fs;
    for (std::uint32_t f : facets_)
        if (f & bit) fs.push_back(f & ~bit);
    SimplicialComplex c;
    c.vertices_ = vertices_;
    c.facets_ = maximalize(std::move(fs));
    return c;
}

SimplicialComplex SimplicialComplex::deletion(int vertex_index) const {
    const std::uint32_t bit = std::uint32_t{1} << vertex_index;
    std::vector<std::uint32_t> fs;
    for (std::uint32_t f : facets_) fs.push_back(f & ~bit);
    SimplicialComplex c;
    c.vertices_ = vertices_;
    c.facets_ = maximalize(std::move(fs));
    return c;
}

std::vector<std::uint32_t> SimplicialComplex::all_faces(
    std::size_t subset_limit) const {
    std::uint32_t all = 0;
    for (std::uint32_t f : facets_) all |= f;
    const int n = std::popcount(all);
    if (n > 31 || (std::size_t{1} << n) > subset_limit)
        throw ComplexityLimit("face enumeration budget exceeded");
    std::vector<std::uint32_t> out;
    // Walk the subsets of the active-vertex mask only.
    std::uint32_t s = 0;
    while (true) {
        if (is_face(s)) out.push_back(s);
        if (s == all) break;
        s = (s - all) & all;    // next subset of `all`
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool vd_memo(const SimplicialComplex& c,
             std::map<std::vector<std::uint32_t>, bool>& memo) {
    if (c.is_void() || c.is_empty_complex()) return true;
    if (!c.is_pure()) return false;
    if (c.is_simplex()) return true;

    auto it = memo.find(c.facets());
    if (it != memo.end()) return it->second;

    const int d = c.dim();
    bool ok = false;
    for (int v : c.active_vertices()) {
        SimplicialComplex del = c.deletion(v);
        if (del.dim() != d) continue;
        SimplicialComplex lk = c.link(v);
        if (lk.dim() != d - 1) continue;
        if (vd_memo(del, memo) && vd_memo(lk, memo)) {
            ok = true;
            break;
        }
    }
    memo[c.facets()] = ok;
    return ok;
}

}  // namespace

bool is_vertex_decomposable(const SimplicialComplex& c, const VDOptions& opt) {
    if (static_cast<int>(c.active_vertices().size()) > opt.vertex_limit)
        throw ComplexityLimit("vertex decomposability check limited to " +
                              std::to_string(opt.vertex_limit) + " vertices");
    std::map<std::vector<std::uint32_t>, bool> memo;
    return vd_memo(c, memo);
}

namespace {

// Smallest number of chosen vertices meeting every edge. Branch on the
// smallest uncovered edge; lower-bound by a greedy disjoint-edge matching.
void min_transversal(const std::vector<std::uint32_t>& edges, std::uint32_t chosen_mask,
                     int chosen, int& best) {
    std::vector<std::uint32_t> open;
    for (std::uint32_t e : edges)
        if (!(e & chosen_mask)) open.push_back(e);
    if (open.empty()) {
        best = std::min(best, chosen);
        return;
    }
    int lb = 0;
    std::uint32_t used = 0;
    for (std::uint32_t e : open)
        if (!(e & used)) {
            ++lb;
            used |= e;
        }
    if (chosen + lb >= best) return;

    std::uint32_t branch = open.front();
    for (std::uint32_t e : open)
        if (std::popcount(e) < std::popcount(branch)) branch = e;
    for (int k = 0; k < 32; ++k)
        if (branch >> k & 1)
            min_transversal(edges, chosen_mask | (std::uint32_t{1} << k), chosen + 1,
                            best);
}

}  // namespace

Codim codimension(const MonomialIdeal& ideal) {
    if (ideal.zero()) return {true, 0};
    std::vector<Var> vars;
    for (const Monomial& g : ideal.gens()) {
        if (g.is_one()) return {false, 0};
        for (Var v : g.support()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.size() > 31)
        throw ComplexityLimit("codimension search limited to 31 variables");

    std::vector<std::uint32_t> edges;
    for (const Monomial& g : ideal.gens()) {
        std::uint32_t m = 0;
        for (Var v : g.support())
            m |= std::uint32_t{1}
                 << (std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
        edges.push_back(m);
    }
    int best = static_cast<int>(vars.size());
    min_transversal(edges, 0, 0, best);
    return {true, best};
}

}  // namespace schubert
