#include "doctest.h"

#include "skein/closure.hpp"

using namespace skein;

namespace {

Scalar vp(int e) { return Scalar::monomial(1, e, 0); }

} // namespace

TEST_CASE("trivial closures") {
    const Scalar d = delta();
    CHECK(markov_trace(HeckeElem::identity(0)) == Scalar(1));
    CHECK(markov_trace(HeckeElem::identity(1)) == d);
    CHECK(markov_trace(HeckeElem::identity(3)) == d * d * d);
}

TEST_CASE("partial closure rules") {
    const Scalar d = delta();
    CHECK(partial_close(HeckeElem::identity(2)) == HeckeElem::identity(1) * d);
    CHECK(partial_close(HeckeElem::generator(2, 1)) == HeckeElem::identity(1) * vp(-1));
    // sigma_1 sigma_2 closes to v^-1 sigma_1
    CHECK(partial_close(eval_word(BraidWord(3, {1, 2}))) == HeckeElem::generator(2, 1) * vp(-1));
    // sigma_2 sigma_1 sigma_2 = sigma_1 sigma_2 sigma_1 closes to v^-1 sigma_1^2
    const HeckeElem s1sq = eval_word(BraidWord(2, {1, 1}));
    CHECK(partial_close(eval_word(BraidWord(3, {2, 1, 2}))) == s1sq * vp(-1));
}

TEST_CASE("kinks carry v^-1 and v") {
    const Scalar d = delta();
    CHECK(markov_trace(HeckeElem::generator(2, 1)) == vp(-1) * d);
    CHECK(markov_trace(HeckeElem::generator(2, 1, -1)) == vp(1) * d);
}

TEST_CASE("hopf link and trefoil by hand") {
    const Scalar d = delta(), z = Scalar::z();
    // sigma^2 = z sigma + 1
    CHECK(markov_trace(eval_word(BraidWord(2, {1, 1}))) == z * vp(-1) * d + d * d);
    // sigma^3 = (z^2 + 1) sigma + z
    const Scalar trefoil = (z * z + Scalar(1)) * vp(-1) * d + z * d * d;
    CHECK(markov_trace(eval_word(BraidWord(2, {1, 1, 1}))) == trefoil);
    // a knot: after removing framing and the unknot factor, a polynomial
    CHECK((trefoil * vp(3) / d).is_polynomial());
}

TEST_CASE("figure eight is amphichiral") {
    const Scalar value = markov_trace(eval_word(BraidWord(3, {1, -2, 1, -2})));
    CHECK(value == value.bar());
    CHECK(value == markov_trace(eval_word(BraidWord(3, {-1, 2, -1, 2}))));
}

TEST_CASE("closure requires strands") {
    CHECK_THROWS(partial_close(HeckeElem::identity(0)));
}
