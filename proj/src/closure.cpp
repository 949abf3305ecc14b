#include "skein/closure.hpp"

#include <stdexcept>

namespace skein {

HeckeElem partial_close(const HeckeElem& x) {
    const int top = x.strands();
    if (top < 1) throw std::invalid_argument("partial_close: needs at least one string");
    const int n = top - 1;
    const auto& g = SymmetricGroup::get(top);

    // A basis braid whose top string n+1 ends at position k factors as
    // omega_alpha * sigma_n sigma_{n-1} ... sigma_k with alpha fixing n+1.
    // Terms are grouped by k so each tail word is applied once.
    std::vector<HeckeAccumulator> groups;
    groups.reserve(top);
    for (int k = 0; k < top; ++k) groups.emplace_back(n);

    for (const auto& t : x.terms()) {
        const auto line = g.element(t.rank).one_line();
        std::vector<int> rest;
        rest.reserve(n);
        int k = 0;
        for (int pos = 1; pos <= top; ++pos) {
            if (line[pos - 1] == top)
                k = pos;
            else
                rest.push_back(line[pos - 1]);
        }
        groups[k - 1].add(Permutation(rest).rank(), t.coef);
    }

    HeckeAccumulator out(n);
    out.add(groups[n].finish(), delta());
    static const Scalar v_inv = Scalar::v_inv();
    for (int k = n; k >= 1; --k) {
        HeckeElem head = groups[k - 1].finish();
        if (head.is_zero()) continue;
        std::vector<int> tail;
        for (int i = n - 1; i >= k; --i) tail.push_back(i);
        out.add(head.mul_word(tail), v_inv);
    }
    return out.finish();
}

Scalar markov_trace(const HeckeElem& x) {
    HeckeElem y = x;
    while (y.strands() > 0) y = partial_close(y);
    return y.is_zero() ? Scalar() : y.terms().front().coef;
}

} // namespace skein
