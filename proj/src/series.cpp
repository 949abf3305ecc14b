#include "skein/series.hpp"

#include <algorithm>

namespace skein {

Series::Series(int degree) {
    if (degree < 0) throw std::invalid_argument("Series: negative truncation degree");
    coeffs_.resize(degree + 1);
    coeffs_[0] = AnnulusElem(1);
}

Series::Series(std::vector<AnnulusElem> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("Series: needs at least the constant term");
}

Series Series::truncated(int degree) const {
    if (degree < 0 || degree > this->degree()) throw std::invalid_argument("Series::truncated: degree out of range");
    return Series(std::vector<AnnulusElem>(coeffs_.begin(), coeffs_.begin() + degree + 1));
}

Series Series::substitute_scale(const Scalar& c) const {
    std::vector<AnnulusElem> out = coeffs_;
    Scalar power(1);
    for (std::size_t k = 1; k < out.size(); ++k) {
        power *= c;
        out[k] *= power;
    }
    return Series(std::move(out));
}

Series Series::mirror() const {
    std::vector<AnnulusElem> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.mirror());
    return Series(std::move(out));
}

Series Series::derivative() const {
    if (degree() == 0) return Series(std::vector<AnnulusElem>{AnnulusElem()});
    std::vector<AnnulusElem> out;
    for (int k = 1; k <= degree(); ++k) out.push_back(coeffs_[k] * Scalar(k));
    return Series(std::move(out));
}

void Series::require_unit_constant(const char* op) const {
    if (!(coeffs_[0] == AnnulusElem(1))) throw ConstantTermError(std::string(op) + ": constant term must be 1");
}

Series Series::inverse() const {
    require_unit_constant("Series::inverse");
    std::vector<AnnulusElem> inv(coeffs_.size());
    inv[0] = AnnulusElem(1);
    for (int k = 1; k <= degree(); ++k) {
        AnnulusElem acc;
        for (int j = 1; j <= k; ++j) acc += coeffs_[j] * inv[k - j];
        inv[k] = -acc;
    }
    return Series(std::move(inv));
}

Series Series::log() const {
    require_unit_constant("Series::log");
    std::vector<AnnulusElem> out(coeffs_.size());
    if (degree() == 0) return Series(std::move(out));
    // log S = integral of S'/S
    const Series q = derivative() * inverse().truncated(degree() - 1);
    for (int k = 1; k <= degree(); ++k) out[k] = exact_div(q[k - 1], Scalar(k));
    return Series(std::move(out));
}

Series operator*(const Series& a, const Series& b) {
    const int m = std::min(a.degree(), b.degree());
    std::vector<AnnulusElem> out(m + 1);
    for (int i = 0; i <= m; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= m; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Series(std::move(out));
}

Series operator+(const Series& a, const Series& b) {
    const int m = std::min(a.degree(), b.degree());
    std::vector<AnnulusElem> out(m + 1);
    for (int i = 0; i <= m; ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
    return Series(std::move(out));
}

bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

std::string Series::to_string() const {
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "[" + coeffs_[k].to_string() + "]";
        if (k > 0) out += "*t^" + std::to_string(k);
    }
    return (out.empty() ? "0" : out) + " + O(t^" + std::to_string(degree() + 1) + ")";
}

Series series_H(int degree) {
    Series base(degree);
    std::vector<AnnulusElem> c = base.coefficients();
    for (int k = 1; k <= degree; ++k) c[k] = AnnulusElem::h(k);
    return Series(std::move(c));
}

} // namespace skein
