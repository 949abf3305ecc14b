#include "skein/scalar.hpp"

#include <numeric>

namespace skein {

namespace {

// Fix the unit ambiguity of num/den: positive leading denominator
// coefficient, no common integer content, denominator exponents start at 0.
void reduce_units(LaurentPoly& num, LaurentPoly& den) {
    if (den.leading().coef < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num.content(), den.content());
    if (g > 1) {
        num = num.divided_by_integer(g);
        den = den.divided_by_integer(g);
    }
    const std::int32_t dv = den.min_v();
    const std::int32_t ds = den.min_s();
    if (dv != 0 || ds != 0) {
        num = num.shifted(-dv, -ds);
        den = den.shifted(-dv, -ds);
    }
}

int span(const LaurentPoly& p, bool in_v) { return in_v ? p.max_v() - p.min_v() : p.max_s() - p.min_s(); }

} // namespace

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void Scalar::normalize() {
    if (den_.is_zero()) return;
    if (num_.is_zero()) {
        den_ = {};
        return;
    }
    reduce_units(num_, den_);
    if (den_.is_one()) {
        den_ = {};
        return;
    }
    if (den_.is_constant()) return;

    const std::int64_t c = den_.content();
    const LaurentPoly primitive = c == 1 ? den_ : den_.divided_by_integer(c);
    if (auto q = exact_divide(num_, primitive)) {
        num_ = std::move(*q);
        den_ = LaurentPoly(c);
        reduce_units(num_, den_);
        if (den_.is_one()) den_ = {};
        return;
    }

    bool changed = false;
    for (bool in_v : {false, true}) {
        const int width = span(den_, in_v);
        for (int d = 1; d <= width && d <= 96; ++d) {
            const LaurentPoly& phi = cyclotomic(d, in_v);
            while (!den_.is_constant()) {
                auto dq = exact_divide(den_, phi);
                if (!dq) break;
                auto nq = exact_divide(num_, phi);
                if (!nq) break;
                den_ = std::move(*dq);
                num_ = std::move(*nq);
                changed = true;
            }
        }
    }
    if (changed) {
        reduce_units(num_, den_);
        if (den_.is_one()) den_ = {};
    }
}

std::optional<std::int64_t> Scalar::as_integer() const {
    if (!is_polynomial() || !num_.is_constant()) return std::nullopt;
    return num_.is_zero() ? 0 : num_.leading().coef;
}

Scalar Scalar::bar() const {
    Scalar r;
    r.num_ = num_.bar();
    r.den_ = den_.bar();
    r.normalize();
    return r;
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return Scalar(1) / pow(-e);
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        if (num_.is_zero()) den_ = {};
        return *this;
    }
    const LaurentPoly d1 = denominator();
    const LaurentPoly d2 = o.denominator();
    if (auto q = exact_divide(d2, d1)) {
        num_ = num_ * *q + o.num_;
        den_ = d2;
    } else if (auto q2 = exact_divide(d1, d2)) {
        num_ += o.num_ * *q2;
        den_ = d1;
    } else {
        num_ = num_ * d2 + o.num_ * d1;
        den_ = d1 * d2;
    }
    if (num_.is_zero()) den_ = {};
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero() || o.is_zero()) return *this = Scalar();
    num_ *= o.num_;
    if (!o.den_.is_zero()) den_ = den_.is_zero() ? o.den_ : den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (is_zero()) return *this;
    LaurentPoly n = num_ * o.denominator();
    LaurentPoly d = denominator() * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.denominator() == b.num_ * a.denominator();
}

std::string Scalar::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar qint(int m) {
    if (m < 0) throw std::invalid_argument("qint: negative argument");
    std::vector<LaurentPoly::Term> terms;
    // s^(m-1) + s^(m-3) + ... + s^(1-m)
    for (int k = m - 1; k >= -(m - 1); k -= 2) terms.push_back({0, k, 1});
    return LaurentPoly::from_terms(std::move(terms));
}

Scalar qfactorial(int m) {
    Scalar r(1);
    for (int k = 2; k <= m; ++k) r *= qint(k);
    return r;
}

Scalar delta() { return Scalar(LaurentPoly::monomial(1, -1, 0) - LaurentPoly::v(), LaurentPoly::z()); }

std::optional<Scalar> try_exact_div(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw DivisionByZero();
    Scalar q = x / y;
    if (!q.denominator().is_constant()) return std::nullopt;
    return q;
}

Scalar exact_div(const Scalar& x, const Scalar& y) {
    if (auto q = try_exact_div(x, y)) return *q;
    throw InexactDivision("inexact division: (" + x.to_string() + ") / (" + y.to_string() + ")");
}

} // namespace skein
