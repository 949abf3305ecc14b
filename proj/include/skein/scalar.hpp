#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "skein/laurent.hpp"

namespace skein {

/// Raised when a division that must be exact (a quantity known to be a
/// Laurent polynomial) leaves a remainder.
class InexactDivision : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computed identity that must hold by construction fails.
class SkeinIdentityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Element of the coefficient ring: a fraction of integer Laurent polynomials
/// in v and s whose denominators are integers times products of s^k - s^-k.
///
/// Fractions are normalized on construction: integer content and monomial
/// units are divided out, the denominator's leading coefficient is positive,
/// and common cyclotomic factors (in s or in v) are cancelled. Equality is
/// decided by cross-multiplication and does not rely on normalization.
class Scalar {
  public:
    Scalar() = default;
    Scalar(std::int64_t c) : num_(c) {}         // NOLINT(google-explicit-constructor)
    Scalar(LaurentPoly p) : num_(std::move(p)) {} // NOLINT(google-explicit-constructor)
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar v() { return LaurentPoly::v(); }
    static Scalar v_inv() { return LaurentPoly::monomial(1, -1, 0); }
    static Scalar s() { return LaurentPoly::s(); }
    static Scalar s_inv() { return LaurentPoly::monomial(1, 0, -1); }
    static Scalar z() { return LaurentPoly::z(); }
    static Scalar monomial(std::int64_t c, std::int32_t v_exp, std::int32_t s_exp) {
        return LaurentPoly::monomial(c, v_exp, s_exp);
    }

    const LaurentPoly& numerator() const { return num_; }
    LaurentPoly denominator() const { return den_.is_zero() ? LaurentPoly(1) : den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// Denominator is 1.
    bool is_polynomial() const { return den_.is_zero(); }
    /// An integer constant; returns it.
    std::optional<std::int64_t> as_integer() const;

    Scalar bar() const;
    Scalar pow(int e) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical text: the numerator rendering, or "(num)/(den)".
    std::string to_string() const;

  private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_; // zero polynomial encodes denominator 1
};

/// [m] = (s^m - s^-m) / (s - s^-1), as a Laurent polynomial.
Scalar qint(int m);

/// [m]! = [1][2]...[m].
Scalar qfactorial(int m);

/// Value of the zero-framed unknot, (v^-1 - v) / (s - s^-1).
Scalar delta();

/// x / y when the quotient is a Laurent polynomial up to an integer
/// denominator; nullopt otherwise. Throws DivisionByZero when y == 0.
std::optional<Scalar> try_exact_div(const Scalar& x, const Scalar& y);

/// As try_exact_div, throwing InexactDivision on failure.
Scalar exact_div(const Scalar& x, const Scalar& y);

} // namespace skein
