#include "skein/permutation.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skein {

Permutation::Permutation(std::span<const int> one_line) {
    if (one_line.size() > static_cast<std::size_t>(kMaxStrands))
        throw std::invalid_argument("Permutation: more than kMaxStrands strands");
    n_ = static_cast<std::uint8_t>(one_line.size());
    std::array<bool, kMaxStrands + 1> seen{};
    for (int k = 0; k < n_; ++k) {
        const int x = one_line[k];
        if (x < 1 || x > n_ || seen[x]) throw std::invalid_argument("Permutation: not a bijection of {1..n}");
        seen[x] = true;
        img_[k] = static_cast<std::uint8_t>(x);
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0 || n > kMaxStrands) throw std::invalid_argument("Permutation: strand count out of range");
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int k = 0; k < n; ++k) p.img_[k] = static_cast<std::uint8_t>(k + 1);
    return p;
}

int Permutation::position_of(int value) const {
    for (int k = 0; k < n_; ++k)
        if (img_[k] == value) return k + 1;
    throw std::out_of_range("Permutation::position_of");
}

int Permutation::length() const {
    int inv = 0;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) inv += img_[a] > img_[b];
    return inv;
}

bool Permutation::is_identity() const {
    for (int k = 0; k < n_; ++k)
        if (img_[k] != k + 1) return false;
    return true;
}

Permutation Permutation::times_generator(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("generator index out of range");
    Permutation r = *this;
    std::swap(r.img_[i - 1], r.img_[i]);
    return r;
}

Permutation Permutation::generator_times(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("generator index out of range");
    Permutation r = *this;
    for (int k = 0; k < n_; ++k) {
        if (r.img_[k] == i)
            r.img_[k] = static_cast<std::uint8_t>(i + 1);
        else if (r.img_[k] == i + 1)
            r.img_[k] = static_cast<std::uint8_t>(i);
    }
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r = *this;
    for (int k = 0; k < n_; ++k) r.img_[img_[k] - 1] = static_cast<std::uint8_t>(k + 1);
    return r;
}

Permutation Permutation::operator*(const Permutation& rho) const {
    if (rho.n_ != n_) throw std::invalid_argument("Permutation: size mismatch");
    Permutation r = *this;
    for (int k = 0; k < n_; ++k) r.img_[k] = img_[rho.img_[k] - 1];
    return r;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> word;
    Permutation p = *this;
    for (;;) {
        int descent = 0;
        for (int i = 1; i < n_; ++i)
            if (p.img_[i - 1] > p.img_[i]) {
                descent = i;
                break;
            }
        if (descent == 0) break;
        word.push_back(descent);
        p = p.times_generator(descent);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> Permutation::one_line() const { return {img_.begin(), img_.begin() + n_}; }

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint32_t Permutation::rank() const {
    std::uint64_t r = 0;
    for (int a = 0; a < n_; ++a) {
        int smaller = 0;
        for (int b = a + 1; b < n_; ++b) smaller += img_[b] < img_[a];
        r += smaller * factorial(n_ - 1 - a);
    }
    return static_cast<std::uint32_t>(r);
}

Permutation Permutation::unrank(int n, std::uint32_t r) {
    if (n < 0 || n > kMaxStrands || r >= factorial(n)) throw std::out_of_range("Permutation::unrank");
    std::vector<int> pool(n);
    for (int k = 0; k < n; ++k) pool[k] = k + 1;
    std::vector<int> line;
    line.reserve(n);
    std::uint64_t rest = r;
    for (int a = 0; a < n; ++a) {
        const std::uint64_t f = factorial(n - 1 - a);
        const auto idx = static_cast<std::size_t>(rest / f);
        rest %= f;
        line.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(line);
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int k = 0; k < n_; ++k) os << (k ? " " : "") << int(img_[k]);
    os << ']';
    return os.str();
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
    const auto order = static_cast<std::uint32_t>(factorial(n));
    elements_.reserve(order);
    lengths_.reserve(order);
    std::vector<int> line(n);
    for (int k = 0; k < n; ++k) line[k] = k + 1;
    do {
        elements_.emplace_back(line);
        lengths_.push_back(static_cast<std::uint8_t>(elements_.back().length()));
    } while (std::next_permutation(line.begin(), line.end()));

    const int gens = std::max(n - 1, 0);
    right_.resize(static_cast<std::size_t>(gens) * order);
    left_.resize(static_cast<std::size_t>(gens) * order);
    for (std::uint32_t r = 0; r < order; ++r)
        for (int i = 1; i <= gens; ++i) {
            right_[(i - 1) * order + r] = elements_[r].times_generator(i).rank();
            left_[(i - 1) * order + r] = elements_[r].generator_times(i).rank();
        }
}

const SymmetricGroup& SymmetricGroup::get(int n) {
    if (n < 0 || n > kMaxStrands) throw std::out_of_range("SymmetricGroup: strand count out of range");
    static std::array<std::unique_ptr<const SymmetricGroup>, kMaxStrands + 1> tables;
    static std::array<std::once_flag, kMaxStrands + 1> flags;
    std::call_once(flags[n], [n] { tables[n] = std::make_unique<const SymmetricGroup>(n); });
    return *tables[n];
}

} // namespace skein
