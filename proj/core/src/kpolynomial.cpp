#include "schubert/kpolynomial.hpp"

#include <stdexcept>

namespace schubert {

void LaurentKPolynomial::insert(std::vector<int> e, Int c) {
    if (c == 0) return;
    if (dim_ < 0) dim_ = static_cast<int>(e.size());
    else if (dim_ != static_cast<int>(e.size()))
        throw std::invalid_argument("Laurent term dimension mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) terms_.emplace(std::move(e), std::move(c));
    else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentKPolynomial LaurentKPolynomial::constant(Int c, int dim) {
    LaurentKPolynomial p;
    p.insert(std::vector<int>(dim, 0), std::move(c));
    return p;
}

LaurentKPolynomial LaurentKPolynomial::monomial(std::vector<int> e, Int c) {
    LaurentKPolynomial p;
    p.insert(std::move(e), std::move(c));
    return p;
}

LaurentKPolynomial LaurentKPolynomial::one_minus_t(const std::vector<int>& e) {
    LaurentKPolynomial p;
    p.insert(std::vector<int>(e.size(), 0), 1);
    p.insert(e, -1);
    return p;
}

Int LaurentKPolynomial::coefficient(const std::vector<int>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentKPolynomial LaurentKPolynomial::operator+(const LaurentKPolynomial& g) const {
    LaurentKPolynomial r = *this;
    if (r.dim_ < 0) r.dim_ = g.dim_;
    for (auto& [e, c] : g.terms_) r.insert(e, c);
    return r;
}

LaurentKPolynomial LaurentKPolynomial::from_map(std::map<std::vector<int>, Int> m) {
    LaurentKPolynomial p;
    for (auto& [e, c] : m) p.insert(e, std::move(c));
    return p;
}

LaurentKPolynomial LaurentKPolynomial::operator-() const {
    LaurentKPolynomial r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentKPolynomial LaurentKPolynomial::operator-(const LaurentKPolynomial& g) const {
    return *this + (-g);
}

LaurentKPolynomial LaurentKPolynomial::operator*(const LaurentKPolynomial& g) const {
    LaurentKPolynomial r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : g.terms_) {
            std::vector<int> e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.insert(std::move(e), c1 * c2);
        }
    return r;
}

LaurentKPolynomial LaurentKPolynomial::shifted(const std::vector<int>& e) const {
    LaurentKPolynomial r;
    for (auto& [e1, c] : terms_) {
        std::vector<int> e2 = e1;
        if (e2.size() != e.size())
            throw std::invalid_argument("shift dimension mismatch");
        for (size_t i = 0; i < e2.size(); ++i) e2[i] += e[i];
        r.insert(std::move(e2), c);
    }
    return r;
}

std::string LaurentKPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Int a = c;
        if (a < 0) { s += first ? "-" : " - "; a = -a; }
        else if (!first) s += " + ";
        bool constant = true;
        for (int x : e) constant = constant && x == 0;
        if (a != 1 || constant) s += a.str();
        if (!constant) {
            if (a != 1) s += "*";
            s += "t^(";
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(e[i]);
            }
            s += ")";
        }
        first = false;
    }
    return s;
}

}  // namespace schubert
