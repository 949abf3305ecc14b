#include "skein/laurent.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

namespace skein {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer coefficient overflow");
    return r;
}

std::int32_t checked_add32(std::int32_t a, std::int32_t b) {
    std::int32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("exponent overflow");
    return r;
}

} // namespace detail

namespace {

using detail::checked_add;
using detail::checked_add32;
using detail::checked_mul;
using Term = LaurentPoly::Term;

bool key_less(const Term& a, const Term& b) { return std::tie(a.v, a.s) < std::tie(b.v, b.s); }
bool key_eq(const Term& a, const Term& b) { return a.v == b.v && a.s == b.s; }

// Sort, combine equal exponents, drop zeros.
void canonicalize(std::vector<Term>& t) {
    std::sort(t.begin(), t.end(), key_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        Term acc = t[i++];
        while (i < t.size() && key_eq(t[i], acc)) acc.coef = checked_add(acc.coef, t[i++].coef);
        if (acc.coef != 0) t[out++] = acc;
    }
    t.resize(out);
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
            r.push_back(a[i++]);
        } else if (i == a.size() || key_less(b[j], a[i])) {
            Term t = b[j++];
            if (subtract) t.coef = checked_mul(t.coef, -1);
            r.push_back(t);
        } else {
            std::int64_t c = subtract ? checked_add(a[i].coef, checked_mul(b[j].coef, -1))
                                      : checked_add(a[i].coef, b[j].coef);
            if (c != 0) r.push_back({a[i].v, a[i].s, c});
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

LaurentPoly::LaurentPoly(std::int64_t c) {
    if (c != 0) terms_.push_back({0, 0, c});
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, std::int32_t v_exp, std::int32_t s_exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({v_exp, s_exp, c});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    canonicalize(terms);
    LaurentPoly p;
    p.terms_ = std::move(terms);
    return p;
}

LaurentPoly LaurentPoly::z() { return s_diff(1); }

LaurentPoly LaurentPoly::s_diff(int k) {
    if (k == 0) return {};
    return from_terms({{0, k, 1}, {0, -k, -1}});
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].v == 0 && terms_[0].s == 0 && terms_[0].coef == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].v == 0 && terms_[0].s == 0);
}

std::int32_t LaurentPoly::min_v() const { return terms_.front().v; }
std::int32_t LaurentPoly::max_v() const { return terms_.back().v; }

std::int32_t LaurentPoly::min_s() const {
    std::int32_t m = std::numeric_limits<std::int32_t>::max();
    for (const auto& t : terms_) m = std::min(m, t.s);
    return m;
}

std::int32_t LaurentPoly::max_s() const {
    std::int32_t m = std::numeric_limits<std::int32_t>::min();
    for (const auto& t : terms_) m = std::max(m, t.s);
    return m;
}

std::int64_t LaurentPoly::content() const {
    std::int64_t g = 0;
    for (const auto& t : terms_) {
        g = std::gcd(g, t.coef);
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::shifted(std::int32_t dv, std::int32_t ds) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        t.v = checked_add32(t.v, dv);
        t.s = checked_add32(t.s, ds);
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coef = checked_mul(t.coef, c);
    return r;
}

LaurentPoly LaurentPoly::divided_by_integer(std::int64_t c) const {
    if (c == 0) throw DivisionByZero();
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        if (t.coef % c != 0) throw std::logic_error("divided_by_integer: inexact");
        t.coef /= c;
    }
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (it->v == std::numeric_limits<std::int32_t>::min() || it->s == std::numeric_limits<std::int32_t>::min())
            throw ArithmeticOverflow("exponent overflow");
        r.terms_.push_back({-it->v, -it->s, it->coef});
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) {
        const auto& t = b.terms_[0];
        LaurentPoly r = a.shifted(t.v, t.s);
        return t.coef == 1 ? r : r.scaled(t.coef);
    }
    if (a.terms_.size() == 1) return b * a;
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            prod.push_back({checked_add32(x.v, y.v), checked_add32(x.s, y.s), checked_mul(x.coef, y.coef)});
    canonicalize(prod);
    LaurentPoly r;
    r.terms_ = std::move(prod);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (first)
            os << t.coef;
        else if (t.coef < 0)
            os << " - " << -t.coef;
        else
            os << " + " << t.coef;
        first = false;
        os << "*v^" << t.v << "*s^" << t.s;
    }
    return os.str();
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return LaurentPoly{};
    if (den.is_monomial()) {
        const auto& d = den.leading();
        for (const auto& t : num.terms())
            if (t.coef % d.coef != 0) return std::nullopt;
        return num.shifted(-d.v, -d.s).divided_by_integer(d.coef);
    }
    // The Newton polygon of a product is the Minkowski sum of the factors',
    // so the quotient's exponents are confined to this box.
    const std::int64_t qv_lo = std::int64_t{num.min_v()} - den.min_v();
    const std::int64_t qv_hi = std::int64_t{num.max_v()} - den.max_v();
    const std::int64_t qs_lo = std::int64_t{num.min_s()} - den.min_s();
    const std::int64_t qs_hi = std::int64_t{num.max_s()} - den.max_s();
    if (qv_lo > qv_hi || qs_lo > qs_hi) return std::nullopt;

    const auto& lead = den.leading();
    std::vector<LaurentPoly::Term> quotient;
    LaurentPoly rem = num;
    while (!rem.is_zero()) {
        const auto& r = rem.leading();
        if (r.coef % lead.coef != 0) return std::nullopt;
        const std::int64_t qv = std::int64_t{r.v} - lead.v;
        const std::int64_t qs = std::int64_t{r.s} - lead.s;
        if (qv < qv_lo || qv > qv_hi || qs < qs_lo || qs > qs_hi) return std::nullopt;
        auto q = LaurentPoly::monomial(r.coef / lead.coef, static_cast<std::int32_t>(qv), static_cast<std::int32_t>(qs));
        quotient.push_back(q.leading());
        rem -= q * den;
    }
    return LaurentPoly::from_terms(std::move(quotient));
}

namespace {

constexpr int kCyclotomicTableSize = 96;

std::vector<LaurentPoly> build_cyclotomics(bool in_v) {
    std::vector<LaurentPoly> table(kCyclotomicTableSize + 1);
    for (int n = 1; n <= kCyclotomicTableSize; ++n) {
        LaurentPoly p = in_v ? LaurentPoly::monomial(1, n, 0) - 1 : LaurentPoly::monomial(1, 0, n) - 1;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) p = *exact_divide(p, table[d]);
        table[n] = std::move(p);
    }
    return table;
}

} // namespace

const LaurentPoly& cyclotomic(int n, bool in_v) {
    static const std::vector<LaurentPoly> in_s_table = build_cyclotomics(false);
    static const std::vector<LaurentPoly> in_v_table = build_cyclotomics(true);
    if (n < 1 || n > kCyclotomicTableSize) throw std::out_of_range("cyclotomic: index out of table range");
    return in_v ? in_v_table[n] : in_s_table[n];
}

} // namespace skein
