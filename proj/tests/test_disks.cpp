#include "syzmf/disks.hpp"
#include "syzmf/json_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace syzmf;

namespace {

struct ExpectedPair {
    const char* p;
    const char* q;
    std::vector<int> v;
    Rational area_t;
    std::vector<Rational> area_x;
    int sign;
};

// The full classification: two pairs per ordered pair of points joined by a
// single line move, nothing else.
const std::vector<ExpectedPair>& expected_census() {
    static const Rational z(0), one(1), third(1, 3), two_thirds(2, 3);
    static const std::vector<ExpectedPair> table = {
        {"++", "-+", {0, 0}, third, {z, z}, -1},
        {"++", "-+", {1, 0}, z, {one, z}, +1},
        {"++", "+-", {-1, 0}, two_thirds, {-one, z}, -1},
        {"++", "+-", {0, 1}, z, {z, one}, +1},
        {"--", "-+", {0, -1}, third, {z, -one}, +1},
        {"--", "-+", {0, 0}, z, {z, z}, -1},
        {"--", "+-", {-1, 0}, third, {-one, z}, -1},
        {"--", "+-", {0, 0}, z, {z, z}, +1},
        {"-+", "++", {-1, 0}, third, {-one, z}, -1},
        {"-+", "++", {0, 0}, z, {z, z}, +1},
        {"-+", "--", {-1, 0}, two_thirds, {-one, z}, +1},
        {"-+", "--", {0, 1}, z, {z, one}, -1},
        {"+-", "++", {0, -1}, third, {z, -one}, -1},
        {"+-", "++", {0, 0}, z, {z, z}, +1},
        {"+-", "--", {0, 0}, third, {z, z}, -1},
        {"+-", "--", {1, 0}, z, {one, z}, +1},
    };
    return table;
}

}  // namespace

TEST_SUITE("disks") {

TEST_CASE("the line catalogue has exactly four strips") {
    const auto catalogue = p1_catalogue();
    REQUIRE(catalogue.size() == 4);

    CHECK(catalogue[0].p == "+");
    CHECK(catalogue[0].q == "-");
    CHECK(catalogue[0].v == 1);
    CHECK(catalogue[0].area == AffineArea{Rational(0), {Rational(1)}});
    CHECK(catalogue[0].sign == 1);

    CHECK(catalogue[1].v == 0);
    CHECK(catalogue[1].area == AffineArea{Rational(1, 2), {Rational(0)}});
    CHECK(catalogue[1].sign == -1);

    CHECK(catalogue[2].p == "-");
    CHECK(catalogue[2].q == "+");
    CHECK(catalogue[2].v == 0);
    CHECK(catalogue[2].area == AffineArea{Rational(0), {Rational(0)}});
    CHECK(catalogue[2].sign == 1);

    CHECK(catalogue[3].v == -1);
    CHECK(catalogue[3].area == AffineArea{Rational(1, 2), {Rational(-1)}});
    CHECK(catalogue[3].sign == -1);
}

TEST_CASE("plane enumeration matches the classification table") {
    const auto all = p2_enumerate_all();
    const auto& expected = expected_census();
    REQUIRE(all.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        CHECK(all[i].p == expected[i].p);
        CHECK(all[i].q == expected[i].q);
        CHECK(all[i].v == expected[i].v);
        CHECK(all[i].area.t_coeff == expected[i].area_t);
        CHECK(all[i].area.x_coeff == expected[i].area_x);
        CHECK(all[i].sign == expected[i].sign);
    }
}

TEST_CASE("pairs crossing both labels or none are empty") {
    CHECK(p2_enumerate("++", "--").empty());
    CHECK(p2_enumerate("--", "++").empty());
    CHECK(p2_enumerate("-+", "+-").empty());
    CHECK(p2_enumerate("+-", "-+").empty());
    for (const auto& label : p2_labels()) CHECK(p2_enumerate(label, label).empty());
}

TEST_CASE("unknown labels are rejected") {
    CHECK_THROWS_AS(p2_enumerate("+", "-"), std::invalid_argument);
}

TEST_CASE("areas are nonnegative over the admissible region") {
    for (double t : {0.3, 1.0, 2.5}) {
        for (double fx : {0.05, 0.45, 0.95}) {
            for (double fy : {0.05, 0.5, 0.95}) {
                const std::vector<double> x{fx * t / 3.0, fy * t / 3.0};
                for (const auto& pair : p2_enumerate_all()) {
                    CHECK(pair.area.evaluate(t, x) >= -1e-12);
                }
                const std::vector<double> x1{fx * t / 2.0};
                for (const auto& disk : p1_catalogue()) {
                    CHECK(disk.area.evaluate(t, x1) >= -1e-12);
                }
            }
        }
    }
}

TEST_CASE("zero-area pairs sit where the table puts them") {
    const auto has_zero_constant = [](const std::string& p, const std::string& q) {
        for (const auto& pair : p2_enumerate(p, q)) {
            if (pair.v == std::vector<int>{0, 0} && pair.area.t_coeff == 0) {
                bool zero_x = true;
                for (const auto& c : pair.area.x_coeff) zero_x = zero_x && c == 0;
                if (zero_x) return true;
            }
        }
        return false;
    };
    CHECK(has_zero_constant("--", "-+"));
    CHECK(has_zero_constant("--", "+-"));
    CHECK(has_zero_constant("-+", "++"));
    CHECK(has_zero_constant("+-", "++"));
    CHECK(!has_zero_constant("++", "-+"));
    CHECK(!has_zero_constant("++", "+-"));
    CHECK(!has_zero_constant("-+", "--"));
    CHECK(!has_zero_constant("+-", "--"));
}

TEST_CASE("nonzero entries connect the two grading classes only") {
    const std::set<std::string> even{"++", "--"}, odd{"-+", "+-"};
    for (const auto& pair : p2_enumerate_all()) {
        CHECK(even.count(pair.p) != even.count(pair.q));
    }
    const PsiMatrix psi = psi_matrix_p2();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool even_i = i < 2, even_j = j < 2;
            if (even_i == even_j) CHECK(psi.entries[i][j].empty());
        }
    }
}

TEST_CASE("three-component pairs balance") {
    int count = 0;
    for (const auto& pair : p2_enumerate_all()) {
        if (pair.components.size() == 1) continue;
        ++count;
        REQUIRE(pair.components.size() == 3);
        CHECK((pair.components[0] == "line-H" || pair.components[0] == "zero-area"));
        CHECK(pair.components[1] == "fibration-zero-area");
        CHECK(pair.components[2] == "maslov-two-infinity");
        // line component along (1,0), fibration along (0,1), Maslov along
        // (-1,-1): the directions cancel.
        const std::vector<int> sum{1 + 0 - 1, 0 + 1 - 1};
        CHECK(sum == std::vector<int>{0, 0});
        // Those pairs always carry the full Maslov area once.
        CHECK(pair.area.t_coeff >= Rational(1, 3));
        CHECK(pair.area.x_coeff[1] == 0);
    }
    CHECK(count == 4);
}

TEST_CASE("catalogue ordering is deterministic") {
    const auto once = pair_catalogue_json(p2_enumerate_all()).dump();
    const auto twice = pair_catalogue_json(p2_enumerate_all()).dump();
    CHECK(once == twice);

    const auto one_entry = p2_enumerate("++", "-+");
    REQUIRE(one_entry.size() == 2);
    CHECK(one_entry[0].v < one_entry[1].v);
}

TEST_CASE("catalogue JSON schema") {
    const auto rows = pair_catalogue_json(p2_enumerate("++", "-+"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].dump() ==
          R"({"p":"++","q":"-+","v":[1,0],"area":{"t":"0/1","x":["1/1","0/1"]},"sign":1,"components":["line-H"]})");
}

TEST_CASE("psi matrices have zero diagonal entries") {
    const PsiMatrix p1 = psi_matrix_p1();
    CHECK(p1.entries[0][0].empty());
    CHECK(p1.entries[1][1].empty());
    CHECK(p1.entries[0][1].terms().size() == 2);
    CHECK(p1.entries[1][0].terms().size() == 2);

    const PsiMatrix p2 = psi_matrix_p2();
    for (int i = 0; i < 4; ++i) CHECK(p2.entries[i][i].empty());
}

}  // TEST_SUITE
