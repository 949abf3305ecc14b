#include "doctest.h"

#include "skein/closure.hpp"
#include "skein/power_sums.hpp"
#include "skein/threading.hpp"

using namespace skein;

namespace {

Scalar vp(int e) { return Scalar::monomial(1, e, 0); }
Scalar sp(int e) { return Scalar::monomial(1, 0, e); }

} // namespace

TEST_CASE("threading braid shape") {
    CHECK(threading_braid(1, 1).to_string() == "1,1");
    CHECK(threading_braid(2, 1).to_string() == "2,1,1,2");
    CHECK(threading_braid(1, 2).to_string() == "1,2,2,1");
    CHECK(threading_braid(0, 3).letters.empty());
    CHECK(eval_word(threading_braid(2, 2)).size() > 1);
}

TEST_CASE("psi_1 of the core circle") {
    // closing one strand of sigma_1^2 = z sigma_1 + 1
    const HeckeElem x = thread_h({1}, 1);
    CHECK(x == HeckeElem::identity(1) * (Scalar::z() * vp(-1) + delta()));
}

TEST_CASE("psi_n of a constant is a multiple of the identity") {
    CHECK(thread(AnnulusElem(3), 2) == HeckeElem::identity(2) * Scalar(3));
    CHECK(thread(AnnulusElem::h(2), 0) == HeckeElem::identity(0) * h_value(2));
}

TEST_CASE("symmetrizer squares by brute force") {
    for (int i = 1; i <= 4; ++i) {
        CAPTURE(i);
        const HeckeElem a = symmetrizer(i);
        // s^(i(i-1)/2) [1][2]...[i]
        Scalar expected = sp(i * (i - 1) / 2);
        for (int k = 1; k <= i; ++k) expected *= qint(k);
        CHECK(alpha(i) == expected);
        CHECK(a * a == a * expected);
        for (int j = 1; j < i; ++j) CHECK(a.generator_mul(j) == a * Scalar::s());
    }
}

TEST_CASE("threader caches agree with direct computation") {
    Threader t(2);
    const HeckeElem h2 = t.h(2);
    CHECK(&t.h(2) == &t.h(2));
    CHECK(h2 == thread_element(symmetrizer(2), 2) * (Scalar(1) / alpha(2)));
    CHECK(t.monomial({2, 1}) == thread_h({2, 1}, 2));
    CHECK(t.braid(BraidWord(2, {1})) == thread_braid(BraidWord(2, {1}), 2));
}

TEST_CASE("m = 1 Murphy relation for T^(n)") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const HeckeElem lhs = thread_braid(BraidWord(1, {}), n) - HeckeElem::identity(n) * delta();
        CHECK(lhs == murphy_power_sum(1, n) * (Scalar::z() * vp(-1)));
    }
}

TEST_CASE("thread of the closed sigma_1 matches A_2") {
    // A_2 = [2] h_2 - s^-1 h_1^2
    const AnnulusElem a2 = AnnulusElem::h(2) * qint(2) - AnnulusElem::h(1) * AnnulusElem::h(1) * sp(-1);
    CHECK(thread_braid(BraidWord(2, {1}), 1) == thread(a2, 1));
}

TEST_CASE("threaded elements are central") {
    const HeckeElem x = thread(power_sum(2), 3);
    for (int i = 1; i < 3; ++i) CHECK(x.generator_mul(i) == x.mul_by_generator(i));
}

TEST_CASE("closing a threaded image") {
    const AnnulusElem p = power_sum(2);
    CHECK(markov_trace(thread(p, 0)) == evaluate(p));
    // the core circle around one closed strand is the Hopf link
    const Scalar d = delta();
    CHECK(markov_trace(thread_h({1}, 1)) == Scalar::z() * vp(-1) * d + d * d);
}
