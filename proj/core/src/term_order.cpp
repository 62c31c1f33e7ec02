#include "schubert/term_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

TermOrder::TermOrder(std::vector<Var> ranking) : ranking_(std::move(ranking)) {
    index_.reserve(ranking_.size());
    for (size_t i = 0; i < ranking_.size(); ++i)
        index_.push_back({ranking_[i], static_cast<int>(i)});
    std::sort(index_.begin(), index_.end());
    for (size_t i = 1; i < index_.size(); ++i)
        if (index_[i].first == index_[i - 1].first)
            throw std::invalid_argument("term order ranking repeats a variable");
}

int TermOrder::rank_of(Var v) const {
    auto it = std::lower_bound(index_.begin(), index_.end(),
                               std::pair<Var, int>{v, -1});
    if (it == index_.end() || it->first != v)
        throw std::invalid_argument("variable " + var_name(v) +
                                    " is not in the term order ranking");
    return it->second;
}

bool TermOrder::knows(Var v) const {
    auto it = std::lower_bound(index_.begin(), index_.end(),
                               std::pair<Var, int>{v, -1});
    return it != index_.end() && it->first == v;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    // exponent lists keyed by rank, ascending (rank 0 = highest priority)
    auto ranked = [&](const Monomial& m) {
        std::vector<std::pair<int, int>> k;
        k.reserve(m.exponents().size());
        for (auto& [v, e] : m.exponents()) k.push_back({rank_of(v), e});
        std::sort(k.begin(), k.end());
        return k;
    };
    auto ka = ranked(a), kb = ranked(b);
    size_t i = 0, j = 0;
    while (i < ka.size() || j < kb.size()) {
        int ra = i < ka.size() ? ka[i].first : static_cast<int>(ranking_.size());
        int rb = j < kb.size() ? kb[j].first : static_cast<int>(ranking_.size());
        if (ra < rb) return std::strong_ordering::greater;  // a has the higher var
        if (rb < ra) return std::strong_ordering::less;
        if (ka[i].second != kb[j].second)
            return ka[i].second > kb[j].second ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
        ++i, ++j;
    }
    return std::strong_ordering::equal;
}

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
}

std::vector<Var> column_major_ranking(std::vector<Var> vars) {
    std::sort(vars.begin(), vars.end(), [](Var a, Var b) {
        if (a.col != b.col) return a.col > b.col;
        return a.row < b.row;
    });
    return vars;
}

}  // namespace schubert
