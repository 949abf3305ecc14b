#include "doctest.h"

#include "skein/closure.hpp"
#include "skein/power_sums.hpp"

using namespace skein;

namespace {

AnnulusElem h(int i) { return AnnulusElem::h(i); }
Scalar sp(int e) { return Scalar::monomial(1, 0, e); }

// Newton: m h_m = sum_{k=1..m} p_k h_{m-k}.
std::vector<AnnulusElem> newton_power_sums(int m_max) {
    std::vector<AnnulusElem> p(m_max + 1);
    for (int m = 1; m <= m_max; ++m) {
        AnnulusElem x = h(m) * Scalar(m);
        for (int k = 1; k < m; ++k) x -= p[k] * h(m - k);
        p[m] = x;
    }
    return p;
}

} // namespace

TEST_CASE("annulus ring arithmetic and rendering") {
    const AnnulusElem x = h(2) * Scalar(2) - h(1) * h(1);
    CHECK(x.to_string() == "2*h2 - 1*h1^2");
    CHECK(x.top_degree() == 2);
    CHECK(x.is_homogeneous(2));
    CHECK((h(2) * h(1)).to_string() == "1*h2*h1");
    CHECK(AnnulusElem(1).to_string() == "1");
    CHECK((x - x).is_zero());
    CHECK(monomial_product({2}, {3, 1}) == Monomial{3, 2, 1});
    CHECK(degree({3, 2, 1}) == 6);
}

TEST_CASE("series inverse and log") {
    const AnnulusElem u = h(1);
    const Series one_plus(std::vector<AnnulusElem>{1, u, 0, 0, 0});
    // 1 / (1 + u t) = sum (-u)^k t^k
    std::vector<AnnulusElem> geo{1};
    for (int k = 1; k <= 4; ++k) geo.push_back(geo.back() * (-u));
    CHECK(one_plus.inverse() == Series(geo));
    // ln(1 + u t) = u t - u^2 t^2 / 2 + u^3 t^3 / 3 - u^4 t^4 / 4
    std::vector<AnnulusElem> ln{0};
    for (int k = 1; k <= 4; ++k) ln.push_back(geo[k] * (Scalar(-1) / Scalar(k)));
    CHECK(one_plus.log() == Series(ln));
    CHECK_THROWS_AS(Series(std::vector<AnnulusElem>{0, u}).log(), ConstantTermError);
    CHECK_THROWS_AS(Series(std::vector<AnnulusElem>{h(2), u}).inverse(), ConstantTermError);
}

TEST_CASE("closed braids A_m") {
    const Scalar z = Scalar::z();
    CHECK(braid_A(1) == h(1));
    CHECK(braid_A(2) == h(2) * qint(2) - h(1) * h(1) * sp(-1));
    CHECK(series_A(3)[1] == h(1) * z);
    for (int m = 1; m <= 6; ++m) CHECK(braid_A(m).is_homogeneous(m));
    CHECK(mirror(braid_A(2)) == h(2) * qint(2) - h(1) * h(1) * sp(1));
}

TEST_CASE("power sums match Newton's identities") {
    const auto expected = newton_power_sums(6);
    const auto p = power_sums(6);
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(power_sum(m) == expected[m]);
        CHECK(p[m] == expected[m]);
    }
    CHECK(power_sum(3).to_string() == "3*h3 - 3*h2*h1 + 1*h1^3");
}

TEST_CASE("mixed braids") {
    const Scalar z = Scalar::z();
    CHECK(mixed_braid_word(1, 1).to_string() == "-2,1");
    CHECK(mixed_braid_word(0, 2).to_string() == "-2,-1");
    CHECK(a_ij(0, 1) == mirror(braid_A(2)));
    CHECK(a_ij(1, 0) == braid_A(2));
    CHECK(a_ij(1, 0) - a_ij(0, 1) == h(1) * h(1) * z);
    CHECK(pi_sum(2) == braid_A(2) + mirror(braid_A(2)));
    CHECK(mixed_braids(3).size() == 3);
}

TEST_CASE("evaluation of h_i") {
    const Scalar d = delta();
    CHECK(h_value(1) == d);
    // a_2 = 1 + s sigma_1, alpha_2 = 1 + s^2
    const Scalar tr = d * d + sp(1) * Scalar::monomial(1, -1, 0) * d;
    CHECK(h_value(2) == tr / (Scalar(1) + sp(2)));
    CHECK(evaluate(h(1) * h(2)) == h_value(1) * h_value(2));
    CHECK(evaluate(AnnulusElem(5)) == Scalar(5));
}

TEST_CASE("annulus exact division") {
    CHECK(exact_div(h(1) * Scalar::z(), Scalar::z()) == h(1));
    CHECK_THROWS_AS(exact_div(h(1), Scalar::z()), InexactDivision);
}
