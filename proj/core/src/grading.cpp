#include "schubert/grading.hpp"

#include <stdexcept>

namespace schubert {

GradingMap::GradingMap(int dim, std::map<Var, std::vector<int>> degrees,
                       std::vector<int> certificate)
    : dim_(dim), degrees_(std::move(degrees)), certificate_(std::move(certificate)) {
    for (auto& [v, d] : degrees_)
        if (static_cast<int>(d.size()) != dim_)
            throw std::invalid_argument("degree vector has wrong dimension");
    if (certificate_.empty()) certificate_.assign(dim_, 1);
    if (static_cast<int>(certificate_.size()) != dim_)
        throw std::invalid_argument("certificate has wrong dimension");
    positive_ = true;    // vacuously so for a variable-free ring
    for (auto& [v, d] : degrees_) {
        long long dot = 0;
        for (int i = 0; i < dim_; ++i)
            dot += static_cast<long long>(certificate_[i]) * d[i];
        if (dot <= 0) { positive_ = false; break; }
    }
}

GradingMap GradingMap::standard(const std::vector<Var>& vars) {
    std::map<Var, std::vector<int>> degrees;
    for (Var v : vars) degrees[v] = {1};
    return GradingMap(1, std::move(degrees), {1});
}

const std::vector<int>& GradingMap::degree(Var v) const {
    auto it = degrees_.find(v);
    if (it == degrees_.end())
        throw std::invalid_argument("variable " + var_name(v) + " has no degree");
    return it->second;
}

std::vector<Var> GradingMap::variables() const {
    std::vector<Var> vs;
    vs.reserve(degrees_.size());
    for (auto& [v, d] : degrees_) vs.push_back(v);
    return vs;
}

std::vector<int> GradingMap::monomial_degree(const Monomial& m) const {
    std::vector<int> deg(dim_, 0);
    for (auto& [v, e] : m.exponents()) {
        const auto& d = degree(v);
        for (int i = 0; i < dim_; ++i) deg[i] += e * d[i];
    }
    return deg;
}

GradingMap GradingMap::refined_with_total_degree() const {
    std::map<Var, std::vector<int>> degrees;
    for (auto& [v, d] : degrees_) {
        std::vector<int> e = d;
        e.push_back(1);
        degrees[v] = std::move(e);
    }
    std::vector<int> cert(dim_ + 1, 0);
    cert[dim_] = 1;
    return GradingMap(dim_ + 1, std::move(degrees), std::move(cert));
}

Multidegree multidegree(const Polynomial& f, const GradingMap& g) {
    if (f.is_zero()) return {Multidegree::Kind::zero, {}};
    std::vector<int> deg;
    bool first = true;
    for (auto& t : f.terms()) {
        auto d = g.monomial_degree(t.mono);
        if (first) { deg = std::move(d); first = false; }
        else if (d != deg) return {Multidegree::Kind::inhomogeneous, {}};
    }
    return {Multidegree::Kind::homogeneous, deg};
}

}  // namespace schubert
