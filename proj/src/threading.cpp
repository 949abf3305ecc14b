#include "skein/threading.hpp"

#include <stdexcept>

#include "skein/closure.hpp"

namespace skein {

namespace {

HeckeElem close_strings(HeckeElem x, int count) {
    for (int k = 0; k < count; ++k) x = partial_close(x);
    return x;
}

} // namespace

BraidWord threading_braid(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("threading_braid: negative strand count");
    std::vector<int> over;
    if (n > 0)
        for (int k = 1; k <= m; ++k)
            for (int i = n + k - 1; i >= k; --i) over.push_back(i);
    std::vector<int> word = over;
    word.insert(word.end(), over.rbegin(), over.rend());
    return BraidWord(n + m, std::move(word));
}

HeckeElem thread_element(const HeckeElem& pattern, int n) {
    const int m = pattern.strands();
    HeckeElem x = tensor(HeckeElem::identity(n), pattern).mul_word(threading_braid(n, m).letters);
    return close_strings(std::move(x), m);
}

HeckeElem thread_braid(const BraidWord& beta, int n) { return thread_element(eval_word(beta), n); }

HeckeElem symmetrizer(int i) {
    if (i < 1) throw std::invalid_argument("symmetrizer: needs i >= 1");
    const auto& g = SymmetricGroup::get(i);
    HeckeAccumulator acc(i);
    for (std::uint32_t r = 0; r < g.order(); ++r) acc.add(r, Scalar::monomial(1, 0, g.length(r)));
    return acc.finish();
}

Scalar alpha(int i) {
    const HeckeElem a = symmetrizer(i);
    const Scalar s = Scalar::s();
    for (int j = 1; j < i; ++j)
        if (!(a.generator_mul(j) == a * s))
            throw SkeinIdentityError("symmetrizer: sigma_" + std::to_string(j) + " a_" + std::to_string(i) + " != s a_" + std::to_string(i));
    // a_i^2 = sum_pi s^l(pi) omega_pi a_i = (sum_pi s^(2 l(pi))) a_i
    const auto& g = SymmetricGroup::get(i);
    std::vector<LaurentPoly::Term> terms;
    for (std::uint32_t r = 0; r < g.order(); ++r) terms.push_back({0, 2 * g.length(r), 1});
    return LaurentPoly::from_terms(std::move(terms));
}

HeckeElem thread_h(const Monomial& m, int n) {
    Threader t(n);
    return t.monomial(m);
}

HeckeElem thread(const AnnulusElem& x, int n) {
    Threader t(n);
    return t.element(x);
}

const HeckeElem& Threader::h(int i) {
    if (i < 1) throw std::invalid_argument("Threader::h: index must be positive");
    auto it = h_cache_.find(i);
    if (it != h_cache_.end()) return it->second;
    HeckeElem x = thread_element(symmetrizer(i), n_);
    x *= Scalar(1) / alpha(i);
    return h_cache_.emplace(i, std::move(x)).first->second;
}

HeckeElem Threader::monomial(const Monomial& m) {
    HeckeElem r = HeckeElem::identity(n_);
    for (int i : m) r = r * h(i);
    return r;
}

HeckeElem Threader::element(const AnnulusElem& x) {
    HeckeAccumulator acc(n_);
    for (const auto& [m, c] : x.terms()) acc.add(monomial(m), c);
    return acc.finish();
}

} // namespace skein
