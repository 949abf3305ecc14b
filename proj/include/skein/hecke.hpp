#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skein/permutation.hpp"
#include "skein/scalar.hpp"

namespace skein {

/// Braid word on n strands; letter i means sigma_i, -i means sigma_i^-1.
struct BraidWord {
    int n = 0;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<int> word);

    /// Same word with every generator index raised by k, on n + k strands.
    BraidWord shifted(int k) const;
    BraidWord operator*(const BraidWord& o) const;
    BraidWord inverse() const;
    std::string to_string() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Element of the Hecke algebra H_n, sigma_i^2 = z sigma_i + 1, in the basis
/// of positive permutation braids omega_pi.
///
/// Terms are stored sorted by the lexicographic rank of the permutation
/// (equivalently, by one-line notation); coefficients are nonzero.
class HeckeElem {
  public:
    struct Term {
        std::uint32_t rank;
        Scalar coef;
    };

    HeckeElem() = default;
    explicit HeckeElem(int n);

    static HeckeElem zero(int n) { return HeckeElem(n); }
    static HeckeElem identity(int n);
    static HeckeElem basis(const Permutation& pi, Scalar coef = Scalar(1));
    /// sigma_i (sign = +1) or sigma_i^-1 (sign = -1).
    static HeckeElem generator(int n, int i, int sign = 1);

    int strands() const { return n_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    Permutation permutation(std::uint32_t rank) const { return SymmetricGroup::get(n_).element(rank); }
    Scalar coefficient(const Permutation& pi) const;
    std::vector<std::pair<Permutation, Scalar>> expand() const;

    /// x * sigma_i^sign
    HeckeElem mul_by_generator(int i, int sign = 1) const;
    /// sigma_i^sign * x
    HeckeElem generator_mul(int i, int sign = 1) const;
    /// x * (image of the word)
    HeckeElem mul_word(const std::vector<int>& letters) const;
    /// (image of the word) * x
    HeckeElem word_mul(const std::vector<int>& letters) const;

    HeckeElem operator-() const;
    HeckeElem& operator+=(const HeckeElem& o);
    HeckeElem& operator-=(const HeckeElem& o);
    HeckeElem& operator*=(const Scalar& c);
    friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
    friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
    friend HeckeElem operator*(HeckeElem a, const Scalar& c) { return a *= c; }
    friend HeckeElem operator*(const Scalar& c, HeckeElem a) { return a *= c; }
    friend HeckeElem operator*(const HeckeElem& x, const HeckeElem& y);

    friend bool operator==(const HeckeElem& a, const HeckeElem& b);

    /// "c * [one-line]" terms joined by " + ", in permutation order; "0" if empty.
    std::string to_string() const;

  private:
    friend class HeckeAccumulator;
    int n_ = 0;
    std::vector<Term> terms_;
};

/// Dense scratch space for summing many elements of one H_n.
class HeckeAccumulator {
  public:
    explicit HeckeAccumulator(int n);
    void add(std::uint32_t rank, const Scalar& c);
    void add(const HeckeElem& x, const Scalar& c = Scalar(1));
    HeckeElem finish();

  private:
    int n_;
    std::vector<Scalar> values_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint32_t> touched_;
};

HeckeElem eval_word(const BraidWord& w);

/// Juxtaposition H_p x H_q -> H_{p+q}: b acts on the strings after a's.
HeckeElem tensor(const HeckeElem& a, const HeckeElem& b);

/// T(j): string j passes once around strings 1..j-1, all crossings positive;
/// word sigma_{j-1} ... sigma_1 sigma_1 ... sigma_{j-1}.
BraidWord murphy_word(int j, int n);
HeckeElem murphy(int j, int n);

/// k-th elementary symmetric polynomial in T(1), ..., T(n).
HeckeElem elementary_symmetric_murphy(int k, int n);

/// Sum of T(j)^m over j = 1..n.
HeckeElem murphy_power_sum(int m, int n);

} // namespace skein
