#include "syzmf/json_io.hpp"
#include "syzmf/matfac.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace syzmf;

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);

LaurentPoly w_p1() {
    return LaurentPoly::variable(1, 0) + LaurentPoly::term(1, 1, 1, {-1});
}

LaurentPoly w_p2() {
    return LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1) +
           LaurentPoly::term(2, 1, 1, {-1, -1});
}

std::vector<FactorPair> p1_pairs() {
    return {{LaurentPoly::variable(1, 0) - LaurentPoly::q_power(1, kHalf),
             LaurentPoly::constant(1, 1) - LaurentPoly::term(1, 1, kHalf, {-1})}};
}

std::vector<FactorPair> p2_pairs() {
    const int n = 2;
    return {{LaurentPoly::variable(n, 0) - LaurentPoly::q_power(n, kThird),
             LaurentPoly::constant(n, 1) - LaurentPoly::term(n, 1, kThird, {-1, 0})},
            {LaurentPoly::variable(n, 1) - LaurentPoly::term(n, 1, Rational(2, 3), {-1, 0}),
             LaurentPoly::constant(n, 1) - LaurentPoly::term(n, 1, kThird, {0, -1})}};
}

}  // namespace

TEST_SUITE("matfac") {

TEST_CASE("single pair reproduces the line factorization") {
    const MatrixFactorization mf = mf_koszul(p1_pairs());
    CHECK(mf.half_rank() == 1);
    CHECK(mf.F().at(0, 0) == p1_pairs()[0].f);
    CHECK(mf.G().at(0, 0) == p1_pairs()[0].g);
}

TEST_CASE("two pairs reproduce the displayed 4x4 entry for entry") {
    const auto pairs = p2_pairs();
    const MatrixFactorization mf = mf_koszul(pairs);
    REQUIRE(mf.half_rank() == 2);
    CHECK(mf.F().at(0, 0) == pairs[0].f);
    CHECK(mf.F().at(0, 1) == pairs[1].f);
    CHECK(mf.F().at(1, 0) == -pairs[1].g);
    CHECK(mf.F().at(1, 1) == pairs[0].g);
    CHECK(mf.G().at(0, 0) == pairs[0].g);
    CHECK(mf.G().at(0, 1) == -pairs[1].f);
    CHECK(mf.G().at(1, 0) == pairs[1].g);
    CHECK(mf.G().at(1, 1) == pairs[0].f);
}

TEST_CASE("zero cofactor gives zero potential") {
    std::mt19937_64 rng(1);
    const std::vector<FactorPair> pairs{{testgen::random_poly(rng, 1), LaurentPoly(1)}};
    const auto [fg, gf] = mf_square(mf_koszul(pairs));
    CHECK(fg.is_zero());
    CHECK(gf.is_zero());
}

TEST_CASE("squares of the surface factorizations") {
    const auto [fg1, gf1] = mf_square(mf_koszul(p1_pairs()));
    const LaurentPoly c1 = w_p1() - LaurentPoly::q_power(1, kHalf, Rational(2));
    CHECK(fg1 == RingMatrix::scalar(1, c1));
    CHECK(gf1 == RingMatrix::scalar(1, c1));

    const auto [fg2, gf2] = mf_square(mf_koszul(p2_pairs()));
    const LaurentPoly c2 = w_p2() - LaurentPoly::q_power(2, kThird, Rational(3));
    CHECK(fg2 == RingMatrix::scalar(2, c2));
    CHECK(gf2 == RingMatrix::scalar(2, c2));
}

TEST_CASE("verification of the surface factorizations") {
    MatrixFactorization m1 = mf_koszul(p1_pairs());
    m1.set_offset(LaurentPoly::q_power(1, kHalf, Rational(2)));
    CHECK(mf_verify(m1, w_p1()).pass);

    MatrixFactorization m2 = mf_koszul(p2_pairs());
    m2.set_offset(LaurentPoly::q_power(2, kThird, Rational(3)));
    CHECK(mf_verify(m2, w_p2()).pass);
}

TEST_CASE("verification failure reports the residual") {
    const std::vector<FactorPair> pairs{
        {LaurentPoly::variable(1, 0), LaurentPoly::constant(1, 1)}};
    const VerifyReport report = mf_verify(mf_koszul(pairs), w_p1());
    CHECK(!report.pass);
    CHECK(report.residual_fg.at(0, 0) == -LaurentPoly::term(1, 1, 1, {-1}));
    CHECK(report.summary().find("fail") == 0);
}

TEST_CASE("offset must be free of z") {
    MatrixFactorization m = mf_koszul(p1_pairs());
    CHECK_THROWS_AS(m.set_offset(LaurentPoly::variable(1, 0)), std::invalid_argument);
}

TEST_CASE("tensor of two rank-one factors equals the two-pair construction") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 20; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 2);
        const std::vector<FactorPair> one{{testgen::random_poly(rng, n, 4, 3),
                                           testgen::random_poly(rng, n, 4, 3)}};
        const std::vector<FactorPair> two{{testgen::random_poly(rng, n, 4, 3),
                                           testgen::random_poly(rng, n, 4, 3)}};
        const MatrixFactorization tensored = mf_tensor(mf_koszul(one), mf_koszul(two));
        const std::vector<FactorPair> both{one[0], two[0]};
        CHECK(tensored == mf_koszul(both));
    }
}

TEST_CASE("tensor square adds potentials and offsets") {
    std::mt19937_64 rng(321);
    for (int iter = 0; iter < 30; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 2);
        std::vector<FactorPair> pa, pb;
        const int ka = 1 + static_cast<int>(rng() % 2), kb = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < ka; ++i)
            pa.push_back({testgen::random_poly(rng, n, 3, 2), testgen::random_poly(rng, n, 3, 2)});
        for (int i = 0; i < kb; ++i)
            pb.push_back({testgen::random_poly(rng, n, 3, 2), testgen::random_poly(rng, n, 3, 2)});

        MatrixFactorization a = mf_koszul(pa), b = mf_koszul(pb);
        const LaurentPoly la = testgen::random_q_unit(rng, n), lb = testgen::random_q_unit(rng, n);
        a.set_offset(la);
        b.set_offset(lb);
        LaurentPoly wa = la, wb = lb;
        for (const auto& p : pa) wa += p.f * p.g;
        for (const auto& p : pb) wb += p.f * p.g;

        CHECK(mf_verify(a, wa).pass);
        CHECK(mf_verify(b, wb).pass);
        CHECK(mf_verify(mf_tensor(a, b), wa + wb).pass);
    }
}

TEST_CASE("tensor of two line factorizations covers the product surface") {
    MatrixFactorization factor = mf_koszul(p1_pairs());
    factor.set_offset(LaurentPoly::q_power(1, kHalf, Rational(2)));
    const std::vector<int> first{0}, second{1};
    const MatrixFactorization product =
        mf_tensor(factor.embed(2, first), factor.embed(2, second));
    const LaurentPoly w = LaurentPoly::variable(2, 0) + LaurentPoly::term(2, 1, 1, {-1, 0}) +
                          LaurentPoly::variable(2, 1) + LaurentPoly::term(2, 1, 1, {0, -1});
    const VerifyReport report = mf_verify(product, w);
    CHECK(report.pass);
    CHECK(product.offset() == LaurentPoly::q_power(2, kHalf, Rational(4)));
}

TEST_CASE("point factorization of the line potential is the displayed one") {
    const std::vector<LaurentPoly> point{LaurentPoly::q_power(1, kHalf)};
    const MatrixFactorization mf = mf_from_point(w_p1(), point);
    CHECK(mf.F().at(0, 0) == p1_pairs()[0].f);
    CHECK(mf.G().at(0, 0) == p1_pairs()[0].g);
    CHECK(mf.offset() == LaurentPoly::q_power(1, kHalf, Rational(2)));
}

TEST_CASE("point factorization of the plane potential") {
    const LaurentPoly r = LaurentPoly::q_power(2, kThird);
    const MatrixFactorization mf = mf_from_point(w_p2(), std::vector<LaurentPoly>{r, r});
    REQUIRE(mf.half_rank() == 2);

    // Pairs (z1 - q^{1/3}, 1 - q^{2/3} z1^-1 z2^-1) and (z2 - q^{1/3}, 1 - q^{1/3} z2^-1).
    CHECK(mf.F().at(0, 0) == LaurentPoly::variable(2, 0) - r);
    CHECK(mf.F().at(1, 1) ==
          LaurentPoly::constant(2, 1) - LaurentPoly::term(2, 1, Rational(2, 3), {-1, -1}));
    CHECK(mf.F().at(0, 1) == LaurentPoly::variable(2, 1) - r);
    CHECK(mf.F().at(1, 0) ==
          -(LaurentPoly::constant(2, 1) - LaurentPoly::term(2, 1, kThird, {0, -1})));

    CHECK(mf_verify(mf, w_p2()).pass);
    CHECK(mf.offset() == LaurentPoly::q_power(2, kThird, Rational(3)));
    // Not the displayed matrix: that one has q^{2/3}/z1 in the top right.
    CHECK(mf.F().at(0, 1) != p2_pairs()[1].f);
}

TEST_CASE("point factorization verifies for random potentials") {
    std::mt19937_64 rng(888);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const LaurentPoly w = testgen::random_poly(rng, n, 5, 2);
        std::vector<LaurentPoly> point;
        for (int i = 0; i < n; ++i)
            point.push_back(LaurentPoly::q_power(n, testgen::random_qexp(rng)));
        const MatrixFactorization mf = mf_from_point(w, point);
        CHECK(mf_verify(mf, w).pass);
    }
}

TEST_CASE("elimination order is a parameter") {
    const LaurentPoly r = LaurentPoly::q_power(2, kThird);
    const std::vector<LaurentPoly> point{r, r};
    const std::vector<int> reversed{1, 0};
    const MatrixFactorization forward = mf_from_point(w_p2(), point);
    const MatrixFactorization backward = mf_from_point(w_p2(), point, reversed);
    CHECK(mf_verify(backward, w_p2()).pass);
    CHECK(forward != backward);
}

TEST_CASE("koszul square law on random pair lists") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int k = 1 + static_cast<int>(rng() % 4);
        std::vector<FactorPair> pairs;
        LaurentPoly total(n);
        for (int i = 0; i < k; ++i) {
            pairs.push_back({testgen::random_poly(rng, n, 5, 3), testgen::random_poly(rng, n, 5, 3)});
            total += pairs.back().f * pairs.back().g;
        }
        const auto [fg, gf] = mf_square(mf_koszul(pairs));
        const RingMatrix expected = RingMatrix::scalar(fg.rows(), total);
        CHECK(fg == expected);
        CHECK(gf == expected);
    }
}

TEST_CASE("matrix factorization JSON round trip") {
    MatrixFactorization mf = mf_koszul(p2_pairs());
    mf.set_offset(LaurentPoly::q_power(2, kThird, Rational(3)));
    const auto text = mf_to_json(mf).dump();
    const MatrixFactorization parsed = mf_from_json(nlohmann::json::parse(text));
    CHECK(parsed == mf);
    CHECK(mf_to_json(parsed).dump() == text);
}

TEST_CASE("empty pair list is rejected") {
    CHECK_THROWS_AS(mf_koszul({}), std::invalid_argument);
}

}  // TEST_SUITE
