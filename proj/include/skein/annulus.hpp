#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/scalar.hpp"

namespace skein {

/// h-monomial h_{i1} h_{i2} ... stored as a weakly decreasing index list.
using Monomial = std::vector<int>;

int degree(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Display order for monomials: by degree, then larger partitions first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Element of the positive part of the annulus skein, modelled as the
/// commutative polynomial ring in h_1, h_2, ... over the scalar ring.
class AnnulusElem {
  public:
    using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

    AnnulusElem() = default;
    AnnulusElem(Scalar c); // NOLINT(google-explicit-constructor)
    AnnulusElem(std::int64_t c) : AnnulusElem(Scalar(c)) {} // NOLINT(google-explicit-constructor)
    AnnulusElem(Monomial m, Scalar c);

    static AnnulusElem h(int i);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Scalar coefficient(const Monomial& m) const;

    /// Largest monomial degree (0 for zero and constants).
    int top_degree() const;
    /// Every monomial has degree d (vacuously true for zero).
    bool is_homogeneous(int d) const;

    /// Bar on every coefficient; h-monomials are fixed.
    AnnulusElem mirror() const;

    AnnulusElem operator-() const;
    AnnulusElem& operator+=(const AnnulusElem& o);
    AnnulusElem& operator-=(const AnnulusElem& o);
    AnnulusElem& operator*=(const Scalar& c);
    friend AnnulusElem operator+(AnnulusElem a, const AnnulusElem& b) { return a += b; }
    friend AnnulusElem operator-(AnnulusElem a, const AnnulusElem& b) { return a -= b; }
    friend AnnulusElem operator*(AnnulusElem a, const Scalar& c) { return a *= c; }
    friend AnnulusElem operator*(const Scalar& c, AnnulusElem a) { return a *= c; }
    friend AnnulusElem operator*(const AnnulusElem& a, const AnnulusElem& b);

    friend bool operator==(const AnnulusElem& a, const AnnulusElem& b);

    /// e.g. "2*h2 - 1*h1^2"; non-integer coefficients are parenthesized.
    std::string to_string() const;

  private:
    void add_term(const Monomial& m, const Scalar& c);
    TermMap terms_;
};

/// Divide every coefficient exactly; throws InexactDivision otherwise.
AnnulusElem exact_div(const AnnulusElem& x, const Scalar& d);

} // namespace skein
