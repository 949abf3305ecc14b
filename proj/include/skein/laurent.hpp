#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

/// Raised when an exponent or integer coefficient leaves the int32/int64 range.
class ArithmeticOverflow : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

/// Raised on division by an exact zero.
class DivisionByZero : public std::domain_error {
  public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int32_t checked_add32(std::int32_t a, std::int32_t b);
} // namespace detail

/// Sparse integer Laurent polynomial in the two variables v and s.
///
/// Terms are kept sorted by (v-exponent, s-exponent) with no zero
/// coefficients; the empty term list is the zero polynomial.
class LaurentPoly {
  public:
    struct Term {
        std::int32_t v = 0;
        std::int32_t s = 0;
        std::int64_t coef = 0;

        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPoly() = default;
    LaurentPoly(std::int64_t c); // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(std::int64_t c, std::int32_t v_exp, std::int32_t s_exp);
    /// Build from arbitrary terms; duplicates are summed and zeros dropped.
    static LaurentPoly from_terms(std::vector<Term> terms);

    static LaurentPoly v() { return monomial(1, 1, 0); }
    static LaurentPoly s() { return monomial(1, 0, 1); }
    /// z = s - s^-1
    static LaurentPoly z();
    /// s^k - s^-k
    static LaurentPoly s_diff(int k);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Coefficient of the lexicographically largest / smallest exponent.
    const Term& leading() const { return terms_.back(); }
    const Term& trailing() const { return terms_.front(); }

    std::int32_t min_v() const;
    std::int32_t max_v() const;
    std::int32_t min_s() const;
    std::int32_t max_s() const;

    /// gcd of all coefficients (0 for the zero polynomial).
    std::int64_t content() const;

    LaurentPoly shifted(std::int32_t dv, std::int32_t ds) const;
    LaurentPoly scaled(std::int64_t c) const;
    /// Divide every coefficient by c; c must divide all of them.
    LaurentPoly divided_by_integer(std::int64_t c) const;

    /// v -> v^-1, s -> s^-1.
    LaurentPoly bar() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// "c*v^a*s^b" terms in ascending (v, s) order joined by " + " / " - "; "0" for zero.
    std::string to_string() const;

  private:
    std::vector<Term> terms_;
};

/// Exact quotient num / den in Z[v^±1, s^±1], or nullopt when den does not
/// divide num. Throws DivisionByZero for den == 0.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// n-th cyclotomic polynomial in s (in_v = false) or v (in_v = true).
const LaurentPoly& cyclotomic(int n, bool in_v);

} // namespace skein
