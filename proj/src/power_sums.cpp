#include "skein/power_sums.hpp"

#include <map>
#include <stdexcept>

#include "skein/closure.hpp"
#include "skein/threading.hpp"

namespace skein {

Series series_A(int degree) {
    const Series h = series_H(degree);
    return h.substitute_scale(Scalar::s()) * h.substitute_scale(Scalar::s_inv()).inverse();
}

std::vector<AnnulusElem> braid_A_all(int degree) {
    const Series a = series_A(degree);
    const Scalar z = Scalar::z();
    std::vector<AnnulusElem> out(degree + 1);
    for (int m = 1; m <= degree; ++m) {
        try {
            out[m] = exact_div(a[m], z);
        } catch (const InexactDivision&) {
            throw SkeinIdentityError("A(t): coefficient of t^" + std::to_string(m) + " is not divisible by z");
        }
    }
    return out;
}

AnnulusElem braid_A(int m) {
    if (m < 1) throw std::invalid_argument("braid_A: needs m >= 1");
    return braid_A_all(m)[m];
}

Series series_A_bar(int degree) {
    const auto a = braid_A_all(degree);
    const Scalar z = Scalar::z();
    std::vector<AnnulusElem> c(degree + 1);
    c[0] = AnnulusElem(1);
    for (int m = 1; m <= degree; ++m) c[m] = -(mirror(a[m]) * z);
    return Series(std::move(c));
}

std::vector<AnnulusElem> power_sums(int degree) {
    const Series l = series_H(degree).log();
    std::vector<AnnulusElem> out(degree + 1);
    for (int m = 1; m <= degree; ++m) out[m] = l[m] * Scalar(m);
    return out;
}

AnnulusElem power_sum(int m) {
    if (m < 1) throw std::invalid_argument("power_sum: needs m >= 1");
    return power_sums(m)[m];
}

std::vector<AnnulusElem> mixed_braids(int m) {
    if (m < 1) throw std::invalid_argument("mixed_braids: needs m >= 1");
    const auto a = braid_A_all(m);
    const Scalar z = Scalar::z();
    std::vector<AnnulusElem> chain(m);
    chain[0] = mirror(a[m]);
    for (int i = 1; i < m; ++i) chain[i] = chain[i - 1] + a[i] * mirror(a[m - i]) * z;
    if (!(chain[m - 1] == a[m]))
        throw SkeinIdentityError("A_{" + std::to_string(m - 1) + ",0} from the recursion differs from A_" + std::to_string(m) +
                                 ": " + chain[m - 1].to_string() + " vs " + a[m].to_string());
    return chain;
}

AnnulusElem a_ij(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("a_ij: negative index");
    return mixed_braids(i + j + 1)[i];
}

AnnulusElem pi_sum(int m) {
    AnnulusElem sum;
    for (const auto& x : mixed_braids(m)) sum += x;
    return sum;
}

BraidWord mixed_braid_word(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("mixed_braid_word: negative index");
    std::vector<int> w;
    for (int k = i + j; k >= i + 1; --k) w.push_back(-k);
    for (int k = i; k >= 1; --k) w.push_back(k);
    return BraidWord(i + j + 1, std::move(w));
}

Scalar h_value(int i) { return markov_trace(symmetrizer(i)) / alpha(i); }

Scalar evaluate(const AnnulusElem& x) {
    std::map<int, Scalar> values;
    Scalar total;
    for (const auto& [m, c] : x.terms()) {
        Scalar term = c;
        for (int i : m) {
            auto it = values.find(i);
            if (it == values.end()) it = values.emplace(i, h_value(i)).first;
            term *= it->second;
        }
        total += term;
    }
    return total;
}

} // namespace skein
