#include "doctest.h"

#include <set>

#include "skein/hecke.hpp"

using namespace skein;

namespace {

int inversions(const Permutation& p) {
    int c = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j) c += p[i] > p[j];
    return c;
}

HeckeElem sigma(int n, int i, int sign = 1) { return HeckeElem::generator(n, i, sign); }

} // namespace

TEST_CASE("permutation basics") {
    const Permutation p{2, 3, 1};
    CHECK(p.to_string() == "[2 3 1]");
    CHECK(p.length() == 2);
    CHECK(p.inverse() * p == Permutation::identity(3));
    CHECK(p.position_of(1) == 3);
    CHECK(Permutation::unrank(3, p.rank()) == p);
    CHECK(factorial(6) == 720);
}

TEST_CASE("symmetric group tables") {
    for (int n = 0; n <= 5; ++n) {
        const auto& g = SymmetricGroup::get(n);
        CHECK(g.order() == factorial(n));
        std::set<std::vector<int>> seen;
        for (std::uint32_t r = 0; r < g.order(); ++r) {
            const auto& p = g.element(r);
            CHECK(g.length(r) == inversions(p));
            CHECK(static_cast<int>(p.reduced_word().size()) == inversions(p));
            CHECK(p.rank() == r);
            seen.insert(p.one_line());
        }
        CHECK(seen.size() == g.order());
    }
}

TEST_CASE("braid words validate their letters") {
    CHECK_THROWS(BraidWord(2, {2}));
    CHECK_THROWS(BraidWord(3, {0}));
    const BraidWord w(3, {1, -2});
    CHECK(w.to_string() == "1,-2");
    CHECK(w.inverse().to_string() == "2,-1");
    CHECK(w.shifted(1).to_string() == "2,-3");
}

TEST_CASE("quadratic relation") {
    const HeckeElem s1 = sigma(2, 1);
    CHECK(s1 * s1 == s1 * Scalar::z() + HeckeElem::identity(2));
    CHECK(sigma(2, 1, -1) == s1 - HeckeElem::identity(2) * Scalar::z());
    CHECK(sigma(2, 1, -1) * s1 == HeckeElem::identity(2));
}

TEST_CASE("positive permutation braids") {
    CHECK(eval_word(BraidWord(3, {1, 2, 1})) == HeckeElem::basis(Permutation{3, 2, 1}));
    CHECK(eval_word(BraidWord(3, {2, 1, 2})) == HeckeElem::basis(Permutation{3, 2, 1}));
    CHECK(eval_word(BraidWord(3, {1, 2})).size() == 1);
    // sigma_1 sigma_2 sigma_1 sigma_1 = omega_{w0} sigma_1, which drops length.
    const HeckeElem x = eval_word(BraidWord(3, {1, 2, 1, 1}));
    const HeckeElem expected = HeckeElem::basis(Permutation{3, 2, 1}, Scalar::z()) + HeckeElem::basis(Permutation{2, 3, 1});
    CHECK(x == expected);
}

TEST_CASE("left and right multiplication agree with products") {
    const HeckeElem x = eval_word(BraidWord(4, {1, -3, 2, 2}));
    for (int i = 1; i < 4; ++i) {
        CHECK(x.mul_by_generator(i) == x * sigma(4, i));
        CHECK(x.generator_mul(i) == sigma(4, i) * x);
        CHECK(x.mul_by_generator(i, -1) == x * sigma(4, i, -1));
    }
    CHECK(x.word_mul({2, -1}) == eval_word(BraidWord(4, {2, -1})) * x);
}

TEST_CASE("tensor embeds side by side") {
    const HeckeElem a = sigma(2, 1);
    const HeckeElem b = sigma(2, 1);
    CHECK(tensor(a, b) == eval_word(BraidWord(4, {1, 3})));
    CHECK(tensor(HeckeElem::identity(1), a) == sigma(3, 2));
    CHECK(tensor(HeckeElem::identity(0), a) == a);
}

TEST_CASE("murphy operators") {
    CHECK(murphy(1, 3) == HeckeElem::identity(3));
    CHECK(murphy(2, 3) == sigma(3, 1) * sigma(3, 1));
    CHECK(murphy_word(3, 3).to_string() == "2,1,1,2");
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) CHECK(murphy(i, 4) * murphy(j, 4) == murphy(j, 4) * murphy(i, 4));
    // e_1 and p_1 coincide; e_2 = (p_1^2 - p_2) / 2
    const HeckeElem p1 = murphy_power_sum(1, 3);
    CHECK(elementary_symmetric_murphy(1, 3) == p1);
    const HeckeElem twice_e2 = p1 * p1 - murphy_power_sum(2, 3);
    CHECK(elementary_symmetric_murphy(2, 3) * Scalar(2) == twice_e2);
    CHECK(elementary_symmetric_murphy(0, 3) == HeckeElem::identity(3));
}
