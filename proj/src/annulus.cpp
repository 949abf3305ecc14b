#include "skein/annulus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace skein {

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), std::greater<>());
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

AnnulusElem::AnnulusElem(Scalar c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

AnnulusElem::AnnulusElem(Monomial m, Scalar c) {
    for (int i : m)
        if (i < 1) throw std::invalid_argument("AnnulusElem: h-index must be positive");
    std::sort(m.begin(), m.end(), std::greater<>());
    if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
}

AnnulusElem AnnulusElem::h(int i) { return AnnulusElem(Monomial{i}, Scalar(1)); }

Scalar AnnulusElem::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

int AnnulusElem::top_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
    return d;
}

bool AnnulusElem::is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return degree(t.first) == d; });
}

AnnulusElem AnnulusElem::mirror() const {
    AnnulusElem r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.bar());
    return r;
}

void AnnulusElem::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AnnulusElem AnnulusElem::operator-() const {
    AnnulusElem r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

AnnulusElem& AnnulusElem::operator+=(const AnnulusElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AnnulusElem& AnnulusElem::operator-=(const AnnulusElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AnnulusElem& AnnulusElem::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

AnnulusElem operator*(const AnnulusElem& a, const AnnulusElem& b) {
    AnnulusElem r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
    return r;
}

bool operator==(const AnnulusElem& a, const AnnulusElem& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
        if (ib->first != m || !(ib->second == c)) return false;
        ++ib;
    }
    return true;
}

namespace {

std::string render_monomial(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < m.size();) {
        std::size_t run = 1;
        while (k + run < m.size() && m[k + run] == m[k]) ++run;
        if (!out.empty()) out += "*";
        out += "h" + std::to_string(m[k]);
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

} // namespace

std::string AnnulusElem::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const auto as_int = c.as_integer();
        const bool first = out.empty();
        if (as_int) {
            const std::int64_t k = *as_int;
            if (first)
                out += std::to_string(k);
            else
                out += (k < 0 ? " - " : " + ") + std::to_string(k < 0 ? -k : k);
        } else {
            out += (first ? "(" : " + (") + c.to_string() + ")";
        }
        if (!m.empty()) out += "*" + render_monomial(m);
    }
    return out;
}

AnnulusElem exact_div(const AnnulusElem& x, const Scalar& d) {
    AnnulusElem r;
    for (const auto& [m, c] : x.terms()) r += AnnulusElem(m, exact_div(c, d));
    return r;
}

} // namespace skein
