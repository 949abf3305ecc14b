#include "skein/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

const Scalar& z_scalar() {
    static const Scalar z = Scalar::z();
    return z;
}

void check_generator(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("generator index " + std::to_string(i) + " out of range for H_" + std::to_string(n));
}

// Sort by rank, sum duplicates, drop zeros.
std::vector<HeckeElem::Term> collect(std::vector<HeckeElem::Term> t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.rank < b.rank; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        HeckeElem::Term acc = std::move(t[i++]);
        while (i < t.size() && t[i].rank == acc.rank) acc.coef += t[i++].coef;
        if (!acc.coef.is_zero()) t[out++] = std::move(acc);
    }
    t.resize(out);
    return t;
}

} // namespace

BraidWord::BraidWord(int strands, std::vector<int> word) : n(strands), letters(std::move(word)) {
    if (n < 0 || n > kMaxStrands) throw std::invalid_argument("BraidWord: strand count out of range");
    for (int l : letters)
        if (l == 0 || std::abs(l) >= n) throw std::out_of_range("BraidWord: generator index out of range");
}

BraidWord BraidWord::shifted(int k) const {
    std::vector<int> w = letters;
    for (int& l : w) l += l > 0 ? k : -k;
    return BraidWord(n + k, std::move(w));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    if (o.n != n) throw std::invalid_argument("BraidWord: strand count mismatch");
    std::vector<int> w = letters;
    w.insert(w.end(), o.letters.begin(), o.letters.end());
    return BraidWord(n, std::move(w));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> w(letters.rbegin(), letters.rend());
    for (int& l : w) l = -l;
    return BraidWord(n, std::move(w));
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < letters.size(); ++k) os << (k ? "," : "") << letters[k];
    return os.str();
}

HeckeElem::HeckeElem(int n) : n_(n) {
    if (n < 0 || n > kMaxStrands) throw std::invalid_argument("HeckeElem: strand count out of range");
}

HeckeElem HeckeElem::identity(int n) {
    HeckeElem e(n);
    e.terms_.push_back({0, Scalar(1)});
    return e;
}

HeckeElem HeckeElem::basis(const Permutation& pi, Scalar coef) {
    HeckeElem e(pi.size());
    if (!coef.is_zero()) e.terms_.push_back({pi.rank(), std::move(coef)});
    return e;
}

HeckeElem HeckeElem::generator(int n, int i, int sign) { return identity(n).mul_by_generator(i, sign); }

Scalar HeckeElem::coefficient(const Permutation& pi) const {
    if (pi.size() != n_) throw std::invalid_argument("HeckeElem::coefficient: size mismatch");
    const auto r = pi.rank();
    auto it = std::lower_bound(terms_.begin(), terms_.end(), r, [](const Term& t, std::uint32_t x) { return t.rank < x; });
    return it != terms_.end() && it->rank == r ? it->coef : Scalar();
}

std::vector<std::pair<Permutation, Scalar>> HeckeElem::expand() const {
    std::vector<std::pair<Permutation, Scalar>> out;
    const auto& g = SymmetricGroup::get(n_);
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(g.element(t.rank), t.coef);
    return out;
}

HeckeElem HeckeElem::mul_by_generator(int i, int sign) const {
    check_generator(n_, i);
    const auto& g = SymmetricGroup::get(n_);
    std::vector<Term> out;
    out.reserve(2 * terms_.size());
    for (const auto& t : terms_) {
        const auto r2 = g.right(i, t.rank);
        const bool up = g.length(r2) > g.length(t.rank);
        out.push_back({r2, t.coef});
        if (sign > 0 && !up) out.push_back({t.rank, t.coef * z_scalar()});
        if (sign < 0 && up) out.push_back({t.rank, -(t.coef * z_scalar())});
    }
    HeckeElem r(n_);
    r.terms_ = collect(std::move(out));
    return r;
}

HeckeElem HeckeElem::generator_mul(int i, int sign) const {
    check_generator(n_, i);
    const auto& g = SymmetricGroup::get(n_);
    std::vector<Term> out;
    out.reserve(2 * terms_.size());
    for (const auto& t : terms_) {
        const auto r2 = g.left(i, t.rank);
        const bool up = g.length(r2) > g.length(t.rank);
        out.push_back({r2, t.coef});
        if (sign > 0 && !up) out.push_back({t.rank, t.coef * z_scalar()});
        if (sign < 0 && up) out.push_back({t.rank, -(t.coef * z_scalar())});
    }
    HeckeElem r(n_);
    r.terms_ = collect(std::move(out));
    return r;
}

HeckeElem HeckeElem::mul_word(const std::vector<int>& letters) const {
    HeckeElem r = *this;
    for (int l : letters) r = r.mul_by_generator(std::abs(l), l > 0 ? 1 : -1);
    return r;
}

HeckeElem HeckeElem::word_mul(const std::vector<int>& letters) const {
    HeckeElem r = *this;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r = r.generator_mul(std::abs(*it), *it > 0 ? 1 : -1);
    return r;
}

HeckeElem HeckeElem::operator-() const {
    HeckeElem r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
    if (o.n_ != n_) throw std::invalid_argument("HeckeElem: strand count mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].rank < o.terms_[j].rank)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].rank < terms_[i].rank) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar c = std::move(terms_[i].coef);
            c += o.terms_[j].coef;
            if (!c.is_zero()) out.push_back({terms_[i].rank, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) { return *this += -o; }

HeckeElem& HeckeElem::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c == Scalar(1)) return *this;
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

HeckeElem operator*(const HeckeElem& x, const HeckeElem& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("HeckeElem: strand count mismatch");
    const auto& g = SymmetricGroup::get(x.n_);
    HeckeAccumulator acc(x.n_);
    if (x.size() <= y.size()) {
        for (const auto& t : x.terms_) acc.add(y.word_mul(g.element(t.rank).reduced_word()), t.coef);
    } else {
        for (const auto& t : y.terms_) acc.add(x.mul_word(g.element(t.rank).reduced_word()), t.coef);
    }
    return acc.finish();
}

bool operator==(const HeckeElem& a, const HeckeElem& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].rank != b.terms_[k].rank || !(a.terms_[k].coef == b.terms_[k].coef)) return false;
    return true;
}

std::string HeckeElem::to_string() const {
    if (terms_.empty()) return "0";
    const auto& g = SymmetricGroup::get(n_);
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + t.coef.to_string() + ")*" + g.element(t.rank).to_string();
    }
    return out;
}

HeckeAccumulator::HeckeAccumulator(int n) : n_(n) {
    const auto order = SymmetricGroup::get(n).order();
    values_.resize(order);
    used_.assign(order, 0);
}

void HeckeAccumulator::add(std::uint32_t rank, const Scalar& c) {
    if (!used_[rank]) {
        used_[rank] = 1;
        touched_.push_back(rank);
        values_[rank] = c;
    } else {
        values_[rank] += c;
    }
}

void HeckeAccumulator::add(const HeckeElem& x, const Scalar& c) {
    if (x.n_ != n_) throw std::invalid_argument("HeckeAccumulator: strand count mismatch");
    const bool unit = c == Scalar(1);
    for (const auto& t : x.terms_) add(t.rank, unit ? t.coef : t.coef * c);
}

HeckeElem HeckeAccumulator::finish() {
    std::sort(touched_.begin(), touched_.end());
    HeckeElem r(n_);
    for (auto rank : touched_) {
        if (!values_[rank].is_zero()) r.terms_.push_back({rank, std::move(values_[rank])});
        values_[rank] = Scalar();
        used_[rank] = 0;
    }
    touched_.clear();
    return r;
}

HeckeElem eval_word(const BraidWord& w) { return HeckeElem::identity(w.n).mul_word(w.letters); }

HeckeElem tensor(const HeckeElem& a, const HeckeElem& b) {
    const int p = a.strands(), q = b.strands();
    if (p + q > kMaxStrands) throw std::invalid_argument("tensor: too many strands");
    const auto& ga = SymmetricGroup::get(p);
    const auto& gb = SymmetricGroup::get(q);
    HeckeAccumulator acc(p + q);
    std::vector<int> line(p + q);
    for (const auto& ta : a.terms()) {
        const auto& pa = ga.element(ta.rank);
        for (int k = 1; k <= p; ++k) line[k - 1] = pa[k];
        for (const auto& tb : b.terms()) {
            const auto& pb = gb.element(tb.rank);
            for (int k = 1; k <= q; ++k) line[p + k - 1] = p + pb[k];
            acc.add(Permutation(line).rank(), ta.coef * tb.coef);
        }
    }
    return acc.finish();
}

BraidWord murphy_word(int j, int n) {
    if (j < 1 || j > n) throw std::out_of_range("murphy: index out of range");
    std::vector<int> w;
    for (int i = j - 1; i >= 1; --i) w.push_back(i);
    for (int i = 1; i <= j - 1; ++i) w.push_back(i);
    return BraidWord(n, std::move(w));
}

HeckeElem murphy(int j, int n) { return eval_word(murphy_word(j, n)); }

HeckeElem elementary_symmetric_murphy(int k, int n) {
    if (k < 0 || k > n) throw std::out_of_range("elementary_symmetric_murphy: degree out of range");
    // e[d] holds e_d(T(1), ..., T(j)) after processing j.
    std::vector<HeckeElem> e(k + 1, HeckeElem::zero(n));
    e[0] = HeckeElem::identity(n);
    for (int j = 1; j <= n; ++j) {
        const auto word = murphy_word(j, n).letters;
        for (int d = std::min(k, j); d >= 1; --d) e[d] += e[d - 1].mul_word(word);
    }
    return e[k];
}

HeckeElem murphy_power_sum(int m, int n) {
    if (m < 0) throw std::invalid_argument("murphy_power_sum: negative exponent");
    HeckeElem sum = HeckeElem::zero(n);
    for (int j = 1; j <= n; ++j) {
        const auto word = murphy_word(j, n).letters;
        HeckeElem p = HeckeElem::identity(n);
        for (int e = 0; e < m; ++e) p = p.mul_word(word);
        sum += p;
    }
    return sum;
}

} // namespace skein
