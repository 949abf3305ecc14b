#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "skein/annulus.hpp"

namespace skein {

/// Raised when a series operation needs constant term 1 and does not get it.
class ConstantTermError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Power series in t with annulus coefficients, known modulo t^(degree+1).
class Series {
  public:
    /// The series 1 truncated at the given degree.
    explicit Series(int degree);
    explicit Series(std::vector<AnnulusElem> coefficients);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const AnnulusElem& operator[](int k) const { return coeffs_.at(k); }
    const std::vector<AnnulusElem>& coefficients() const { return coeffs_; }

    Series truncated(int degree) const;
    /// t -> c t: coefficient of t^k multiplied by c^k.
    Series substitute_scale(const Scalar& c) const;
    Series mirror() const;
    Series derivative() const;
    Series inverse() const;
    Series log() const;

    /// Product modulo t^(min degree + 1).
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator+(const Series& a, const Series& b);
    friend bool operator==(const Series& a, const Series& b);

    std::string to_string() const;

  private:
    void require_unit_constant(const char* op) const;
    std::vector<AnnulusElem> coeffs_;
};

/// H(t) = 1 + h_1 t + ... + h_M t^M.
Series series_H(int degree);

} // namespace skein
