#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace skein {

/// Largest strand count supported by the dense per-n tables.
inline constexpr int kMaxStrands = 9;

/// Element of S_n in 1-based one-line notation.
class Permutation {
  public:
    Permutation() = default;
    /// Validates that one_line is a bijection of {1..n}.
    explicit Permutation(std::span<const int> one_line);
    Permutation(std::initializer_list<int> one_line)
        : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

    static Permutation identity(int n);

    int size() const { return n_; }
    /// Image of position pos (1-based).
    int operator[](int pos) const { return img_[pos - 1]; }
    int position_of(int value) const;

    /// Number of inversions.
    int length() const;
    bool is_identity() const;

    /// pi * s_i: swap the entries at positions i and i+1.
    Permutation times_generator(int i) const;
    /// s_i * pi: swap the values i and i+1.
    Permutation generator_times(int i) const;
    Permutation inverse() const;
    /// Composition (pi * rho)(k) = pi(rho(k)).
    Permutation operator*(const Permutation& rho) const;

    /// Deterministic reduced word: repeatedly strip the smallest right descent,
    /// so that omega_pi = sigma_{w[0]} ... sigma_{w[k-1]}.
    std::vector<int> reduced_word() const;

    std::vector<int> one_line() const;

    /// Index in the lexicographic ordering of S_n.
    std::uint32_t rank() const;
    static Permutation unrank(int n, std::uint32_t r);

    /// "[2 1 3]"
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.img_ <=> b.img_;
    }

  private:
    std::array<std::uint8_t, kMaxStrands> img_{};
    std::uint8_t n_ = 0;
};

std::uint64_t factorial(int n);

/// Immutable lookup tables for S_n: elements in lexicographic order, lengths,
/// and the rank action of left/right multiplication by simple transpositions.
class SymmetricGroup {
  public:
    /// Shared, lazily built table for n <= kMaxStrands (thread-safe).
    static const SymmetricGroup& get(int n);

    int n() const { return n_; }
    std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
    const Permutation& element(std::uint32_t r) const { return elements_[r]; }
    int length(std::uint32_t r) const { return lengths_[r]; }
    /// rank of element(r) * s_i
    std::uint32_t right(int i, std::uint32_t r) const { return right_[(i - 1) * order() + r]; }
    /// rank of s_i * element(r)
    std::uint32_t left(int i, std::uint32_t r) const { return left_[(i - 1) * order() + r]; }

    explicit SymmetricGroup(int n);

  private:
    int n_;
    std::vector<Permutation> elements_;
    std::vector<std::uint8_t> lengths_;
    std::vector<std::uint32_t> right_;
    std::vector<std::uint32_t> left_;
};

} // namespace skein
