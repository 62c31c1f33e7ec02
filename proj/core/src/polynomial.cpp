#include "schubert/polynomial.hpp"

#include "schubert/term_order.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace schubert {

Var var(int row, int col) {
    return Var{static_cast<std::int16_t>(row), static_cast<std::int16_t>(col)};
}

std::string var_name(Var v, char letter) {
    std::string s(1, letter);
    s += "_{" + std::to_string(v.row) + "," + std::to_string(v.col) + "}";
    return s;
}

Monomial::Monomial(std::vector<std::pair<Var, int>> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end());
    size_t out = 0;
    for (size_t i = 0; i < exps_.size();) {
        Var v = exps_[i].first;
        long long e = 0;
        while (i < exps_.size() && exps_[i].first == v) e += exps_[i++].second;
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e > 0) exps_[out++] = {v, static_cast<int>(e)};
    }
    exps_.resize(out);
}

Monomial Monomial::variable(Var v, int exp) {
    return Monomial({{v, exp}});
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : exps_) d += e;
    return d;
}

int Monomial::exponent_of(Var v) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), std::pair<Var, int>{v, 0});
    if (it != exps_.end() && it->first == v) return it->second;
    return 0;
}

bool Monomial::is_squarefree() const {
    for (auto& [v, e] : exps_)
        if (e > 1) return false;
    return true;
}

std::vector<Var> Monomial::support() const {
    std::vector<Var> s;
    s.reserve(exps_.size());
    for (auto& [v, e] : exps_) s.push_back(v);
    return s;
}

Monomial Monomial::operator*(const Monomial& m) const {
    std::vector<std::pair<Var, int>> out;
    out.reserve(exps_.size() + m.exps_.size());
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < m.exps_.size()) {
        if (j == m.exps_.size() || (i < exps_.size() && exps_[i].first < m.exps_[j].first))
            out.push_back(exps_[i++]);
        else if (i == exps_.size() || m.exps_[j].first < exps_[i].first)
            out.push_back(m.exps_[j++]);
        else {
            out.push_back({exps_[i].first, exps_[i].second + m.exps_[j].second});
            ++i, ++j;
        }
    }
    Monomial r;
    r.exps_ = std::move(out);
    return r;
}

bool Monomial::divides(const Monomial& m) const {
    size_t j = 0;
    for (auto& [v, e] : exps_) {
        while (j < m.exps_.size() && m.exps_[j].first < v) ++j;
        if (j == m.exps_.size() || m.exps_[j].first != v || m.exps_[j].second < e)
            return false;
    }
    return true;
}

Monomial Monomial::divide_by(const Monomial& m) const {
    // this / m
    std::vector<std::pair<Var, int>> out;
    size_t j = 0;
    for (auto& [v, e] : exps_) {
        int sub = 0;
        while (j < m.exps_.size() && m.exps_[j].first < v) ++j;
        if (j < m.exps_.size() && m.exps_[j].first == v) sub = m.exps_[j].second;
        int d = e - sub;
        if (d < 0) throw std::invalid_argument("monomial division is not exact");
        if (d > 0) out.push_back({v, d});
    }
    Monomial r;
    r.exps_ = std::move(out);
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<Var, int>> out;
    size_t i = 0, j = 0;
    while (i < a.exps_.size() || j < b.exps_.size()) {
        if (j == b.exps_.size() ||
            (i < a.exps_.size() && a.exps_[i].first < b.exps_[j].first))
            out.push_back(a.exps_[i++]);
        else if (i == a.exps_.size() || b.exps_[j].first < a.exps_[i].first)
            out.push_back(b.exps_[j++]);
        else {
            out.push_back({a.exps_[i].first,
                           std::max(a.exps_[i].second, b.exps_[j].second)});
            ++i, ++j;
        }
    }
    Monomial r;
    r.exps_ = std::move(out);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.exps_.size() && j < b.exps_.size()) {
        if (a.exps_[i].first < b.exps_[j].first) ++i;
        else if (b.exps_[j].first < a.exps_[i].first) ++j;
        else return false;
    }
    return true;
}

std::string Monomial::str(char letter) const {
    if (is_one()) return "1";
    std::string s;
    for (auto& [v, e] : exps_) {
        if (!s.empty()) s += "*";
        s += var_name(v, letter);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

Polynomial::Polynomial(Int constant) {
    if (constant != 0) terms_.push_back({Monomial(), std::move(constant)});
}

Polynomial::Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
    normalize();
}

Polynomial Polynomial::variable(Var v) {
    return monomial(Monomial::variable(v));
}

Polynomial Polynomial::monomial(const Monomial& m, Int c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({m, std::move(c)});
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    size_t out = 0;
    for (size_t i = 0; i < terms_.size();) {
        Monomial m = terms_[i].mono;
        Int c = 0;
        while (i < terms_.size() && terms_[i].mono == m) c += terms_[i++].coef;
        if (c != 0) terms_[out++] = {std::move(m), std::move(c)};
    }
    terms_.resize(out);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_single_variable() const {
    return terms_.size() == 1 && terms_[0].mono.total_degree() == 1;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

std::vector<Var> Polynomial::support() const {
    std::vector<Var> s;
    for (auto& t : terms_)
        for (auto v : t.mono.support()) s.push_back(v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool Polynomial::involves(Var v) const {
    for (auto& t : terms_)
        if (t.mono.exponent_of(v) > 0) return true;
    return false;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j == g.terms_.size() ||
            (i < terms_.size() && terms_[i].mono < g.terms_[j].mono))
            out.push_back(terms_[i++]);
        else if (i == terms_.size() || g.terms_[j].mono < terms_[i].mono)
            out.push_back(g.terms_[j++]);
        else {
            Int c = terms_[i].coef + g.terms_[j].coef;
            if (c != 0) out.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        }
    }
    Polynomial r;
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    return *this + (-g);
}

Polynomial Polynomial::times(const Monomial& m, const Int& c) const {
    if (c == 0) return Polynomial();
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    // multiplying by a fixed monomial preserves the structural sort? Not in
    // general, so re-sort to stay canonical.
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    return r;
}

Polynomial Polynomial::times(const Int& c) const {
    if (c == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    std::map<Monomial, Int> acc;
    for (auto& a : terms_)
        for (auto& b : g.terms_) acc[a.mono * b.mono] += a.coef * b.coef;
    std::vector<Term> out;
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, c});
    Polynomial r;
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::rename_vars(const std::function<Var(Var)>& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        std::vector<std::pair<Var, int>> exps;
        for (auto& [v, e] : t.mono.exponents()) exps.push_back({f(v), e});
        out.push_back({Monomial(std::move(exps)), t.coef});
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::zero_vars(const std::vector<Var>& vars) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
        bool killed = false;
        for (Var v : vars)
            if (t.mono.exponent_of(v) > 0) { killed = true; break; }
        if (!killed) out.push_back(t);
    }
    Polynomial r;
    r.terms_ = std::move(out);
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::split_linear(Var y) const {
    Polynomial g, r;
    Monomial ym = Monomial::variable(y);
    for (auto& t : terms_) {
        if (t.mono.exponent_of(y) > 0)
            g.terms_.push_back({t.mono.divide_by(ym), t.coef});
        else
            r.terms_.push_back(t);
    }
    std::sort(g.terms_.begin(), g.terms_.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    if (g.involves(y))
        throw std::domain_error("split_linear: variable occurs with exponent >= 2");
    return {std::move(g), std::move(r)};
}

Int Polynomial::content() const {
    Int g = 0;
    for (auto& t : terms_) {
        g = gcd(g, t.coef);
        if (g == 1) break;
    }
    return g < 0 ? Int(-g) : g;
}

Polynomial Polynomial::primitive_part() const {
    Int c = content();
    if (c == 0 || c == 1) return *this;
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef /= c;
    return r;
}

Polynomial Polynomial::canonical_up_to_sign() const {
    Polynomial p = primitive_part();
    if (!p.terms_.empty() && p.terms_.front().coef < 0)
        for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    const Term* best = &terms_[0];
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.greater(terms_[i].mono, best->mono)) best = &terms_[i];
    return *best;
}

Monomial Polynomial::leading_monomial(const TermOrder& order) const {
    return leading_term(order).mono;
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& g) const {
    size_t k = std::min(terms_.size(), g.terms_.size());
    for (size_t i = 0; i < k; ++i) {
        if (auto c = terms_[i].mono <=> g.terms_[i].mono; c != 0) return c;
        if (terms_[i].coef < g.terms_[i].coef) return std::strong_ordering::less;
        if (terms_[i].coef > g.terms_[i].coef) return std::strong_ordering::greater;
    }
    return terms_.size() <=> g.terms_.size();
}

static std::string term_string(const Term& t, char letter, bool first) {
    std::string s;
    Int a = t.coef;
    if (a < 0) { s += first ? "-" : " - "; a = -a; }
    else if (!first) s += " + ";
    if (a != 1 || t.mono.is_one()) {
        s += a.str();
        if (!t.mono.is_one()) s += "*";
    }
    if (!t.mono.is_one()) s += t.mono.str(letter);
    return s;
}

std::string Polynomial::str(char letter) const {
    if (terms_.empty()) return "0";
    // structurally sorted; print back-to-front so bigger positions come last
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i)
        s += term_string(terms_[i], letter, i == 0);
    return s;
}

std::string Polynomial::str(char letter, const TermOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<Term> sorted = terms_;
    std::sort(sorted.begin(), sorted.end(), [&](const Term& a, const Term& b) {
        return order.greater(a.mono, b.mono);
    });
    std::string s;
    for (size_t i = 0; i < sorted.size(); ++i)
        s += term_string(sorted[i], letter, i == 0);
    return s;
}

namespace {

struct DetContext {
    const std::vector<std::vector<Polynomial>>* m;
    std::unordered_map<std::uint64_t, Polynomial> memo;
};

bool is_simple(const Polynomial& p) { return p.is_zero() || p.is_constant(); }

Polynomial det_rec(DetContext& ctx, std::uint32_t rows, std::uint32_t cols) {
    int k = __builtin_popcount(rows);
    if (k == 0) return Polynomial(Int(1));
    std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

    std::vector<int> ri, ci;
    for (int i = 0; i < 32; ++i) {
        if (rows & (1u << i)) ri.push_back(i);
        if (cols & (1u << i)) ci.push_back(i);
    }

    // pick the row or column with the most constant entries
    int best_line = 0, best_score = -1;
    bool best_is_row = true;
    for (int a = 0; a < k; ++a) {
        int score = 0;
        for (int b = 0; b < k; ++b)
            if (is_simple((*ctx.m)[ri[a]][ci[b]])) ++score;
        if (score > best_score) { best_score = score; best_line = a; best_is_row = true; }
    }
    for (int b = 0; b < k; ++b) {
        int score = 0;
        for (int a = 0; a < k; ++a)
            if (is_simple((*ctx.m)[ri[a]][ci[b]])) ++score;
        if (score > best_score) { best_score = score; best_line = b; best_is_row = false; }
    }

    Polynomial det;
    for (int t = 0; t < k; ++t) {
        int a = best_is_row ? best_line : t;
        int b = best_is_row ? t : best_line;
        const Polynomial& entry = (*ctx.m)[ri[a]][ci[b]];
        if (entry.is_zero()) continue;
        Polynomial minor = det_rec(ctx, rows & ~(1u << ri[a]), cols & ~(1u << ci[b]));
        Polynomial contrib = entry * minor;
        if ((a + b) % 2 == 0) det = det + contrib;
        else det = det - contrib;
    }
    ctx.memo.emplace(key, det);
    return det;
}

}  // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    size_t k = m.size();
    if (k > 8) throw std::invalid_argument("determinant: size > 8");
    for (auto& row : m)
        if (row.size() != k) throw std::invalid_argument("determinant: not square");
    if (k == 0) return Polynomial(Int(1));
    DetContext ctx{&m, {}};
    std::uint32_t mask = k == 32 ? ~0u : ((1u << k) - 1);
    return det_rec(ctx, mask, mask);
}

}  // namespace schubert
