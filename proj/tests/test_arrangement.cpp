#include "doctest.h"

#include <random>

#include "f1arr/arrangement.hpp"
#include "f1arr/errors.hpp"
#include "helpers.hpp"

using namespace f1arr;
using testutil::central;
using testutil::hp;

namespace {

// x1, x2, x3 and their sum, in dimension 4: the running non-essential example
Arrangement coord3_sum_dim4() {
    return central({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}}, 4);
}

}  // namespace

TEST_CASE("normalize merges scalar multiples and sign flips") {
    Normalized n1 = normalize({hp({1, 0}), hp({2, 0}), hp({0, 1})}, 2);
    CHECK(n1.arrangement.size() == 2);
    CHECK(n1.merged_duplicates == 1);

    Normalized n2 = normalize({hp({-1, 1}), hp({1, -1})}, 2);
    CHECK(n2.arrangement.size() == 1);
    CHECK(n2.arrangement.hyperplanes[0].normal == std::vector<Int>{1, -1});

    CHECK(coord3_sum_dim4().size() == 4);
}

TEST_CASE("normalize is idempotent and rejects zero normals") {
    std::mt19937 rng(1001);
    for (int trial = 0; trial < 50; ++trial) {
        Arrangement a = testutil::random_central(rng);
        Normalized again = normalize(a.hyperplanes, a.ambient_dim);
        CHECK(again.arrangement == a);
        CHECK(again.merged_duplicates == 0);
    }
    CHECK(testutil::thrown_kind([] {
              std::vector<Rational> zero(2);
              Hyperplane::make(zero);
          }) == ErrorKind::Input);
}

TEST_CASE("hyperplane canonical form clears denominators") {
    Hyperplane h = Hyperplane::make({Rational(Int(1), Int(2)), Rational(Int(-1), Int(3))},
                                    Rational(Int(1), Int(6)));
    CHECK(h.normal == std::vector<Int>{3, -2});
    CHECK(h.offset == 1);
}

TEST_CASE("is_essential") {
    CHECK(is_essential(central({{1, 0}, {0, 1}}, 2)));
    CHECK(!is_essential(coord3_sum_dim4()));  // normals span only a 3-dim subspace of Q^4
    CHECK(is_essential(central({{1, 0}, {0, 1}, {1, 1}}, 2)));
    Arrangement affine = normalize({hp({1}, 1)}, 1).arrangement;
    CHECK(testutil::thrown_kind([&] { is_essential(affine); }) == ErrorKind::Input);
}

TEST_CASE("is_boolean") {
    for (std::size_t n = 0; n <= 3; ++n) {
        std::vector<std::vector<long>> normals;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<long> v(3, 0);
            v[i] = 1;
            normals.push_back(v);
        }
        CHECK(is_boolean(central(normals, 3)));
    }
    CHECK(!is_boolean(coord3_sum_dim4()));
    CHECK(!is_boolean(central({{1, 0}, {0, 1}, {1, 1}}, 2)));  // rank 2 < n = 3
}

TEST_CASE("boolean arrangements are essential exactly when n = dim") {
    std::mt19937 rng(1002);
    for (int trial = 0; trial < 100; ++trial) {
        Arrangement a = testutil::random_central(rng);
        if (!is_boolean(a)) continue;
        CHECK(is_essential(a) == (a.size() == a.ambient_dim));
    }
}

TEST_CASE("cone lifts affine hyperplanes and adds the hyperplane at infinity") {
    Arrangement affine = normalize({hp({1}, 1)}, 1).arrangement;  // x = 1 on the line
    Arrangement c = cone(affine);
    CHECK(c.central());
    CHECK(c.ambient_dim == 2);
    CHECK(c.size() == 2);
    // x - x0 = 0 and x0 = 0, with x0 the new first coordinate
    CHECK(c.hyperplanes[0].normal == std::vector<Int>{1, -1});
    CHECK(c.hyperplanes[1].normal == std::vector<Int>{1, 0});

    Arrangement already_central = central({{1, 0}, {0, 1}}, 2);
    Arrangement cc = cone(already_central);
    CHECK(cc.size() == 3);
    CHECK(cc.central());

    Arrangement empty_line{1, {}, ArrangementKind::Central};
    CHECK(cone(empty_line).size() == 1);
}

TEST_CASE("delete_hyperplane") {
    Arrangement a = coord3_sum_dim4();
    // canonical order puts the dependent normal (1,1,1,0) last
    Arrangement boolean3 = delete_hyperplane(a, 3);
    CHECK(boolean3.size() == 3);
    CHECK(is_boolean(boolean3));

    Arrangement single = central({{1, 0}}, 2);
    CHECK(delete_hyperplane(single, 0).size() == 0);

    // deletion then re-adding restores the original set
    Arrangement dropped = delete_hyperplane(a, 1);
    std::vector<Hyperplane> again = dropped.hyperplanes;
    again.push_back(a.hyperplanes[1]);
    CHECK(normalize(again, 4).arrangement == a);

    CHECK(testutil::thrown_kind([&] { delete_hyperplane(a, 4); }) == ErrorKind::Input);
}

TEST_CASE("restrict_to") {
    Arrangement two = central({{1, 0}, {0, 1}}, 2);
    std::size_t x_index = two.hyperplanes[0].normal == std::vector<Int>{1, 0} ? 0 : 1;
    Arrangement r1 = restrict_to(two, x_index);
    CHECK(r1.ambient_dim == 1);
    CHECK(r1.size() == 1);

    // on x + y = 0 the two coordinate lines cut the same point
    Arrangement three = central({{1, 0}, {0, 1}, {1, 1}}, 2);
    CHECK(restrict_to(three, 2).size() == 1);

    Arrangement a = coord3_sum_dim4();
    std::size_t e1 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.hyperplanes[i].normal == std::vector<Int>{1, 0, 0, 0}) e1 = i;
    }
    Arrangement r2 = restrict_to(a, e1);
    CHECK(r2.ambient_dim == 3);
    CHECK(r2.size() == 3);  // pullbacks of x2, x3, x2+x3 stay distinct

    Arrangement affine = normalize({hp({1}, 1)}, 1).arrangement;
    CHECK(testutil::thrown_kind([&] { restrict_to(affine, 0); }) == ErrorKind::Input);
}

TEST_CASE("restriction output is reduced and one dimension down") {
    std::mt19937 rng(1003);
    for (int trial = 0; trial < 50; ++trial) {
        Arrangement a = testutil::random_central(rng);
        if (a.size() == 0) continue;
        Arrangement r = restrict_to(a, a.size() - 1);
        CHECK(r.ambient_dim == a.ambient_dim - 1);
        CHECK(normalize(r.hyperplanes, r.ambient_dim).arrangement == r);
    }
}

TEST_CASE("arrangement text format round trip") {
    Arrangement a = coord3_sum_dim4();
    ParsedArrangement back = parse_arrangement(serialize(a));
    CHECK(back.arrangement == a);
    CHECK(back.warnings.empty());

    Arrangement affine = normalize({hp({1, 0}, 1, 2), hp({0, 1})}, 2).arrangement;
    CHECK(parse_arrangement(serialize(affine)).arrangement == affine);
}

TEST_CASE("parser accepts comments, rationals and duplicate merging") {
    ParsedArrangement p = parse_arrangement(
        "# a comment\n"
        "arrangement central dim=2\n"
        "H 1 0   # the x axis\n"
        "H 2 0\n"
        "H 1/2 1/3\n"
        "\n");
    CHECK(p.arrangement.size() == 2);
    CHECK(p.merged_duplicates == 1);
    REQUIRE(p.warnings.size() == 1);
    CHECK(p.warnings[0].find("merged 1 duplicate") != std::string::npos);
    CHECK(p.arrangement.hyperplanes[1].normal == std::vector<Int>{3, 2});
}

TEST_CASE("parser rejections") {
    auto input_kind = [](const std::string& text) {
        return testutil::thrown_kind([&] { parse_arrangement(text); });
    };
    CHECK(input_kind("arrangement central dim=2\nH 1\n") == ErrorKind::Input);   // arity
    CHECK(input_kind("arrangement central dim=2\nH 0 0\n") == ErrorKind::Input); // zero normal
    CHECK(input_kind("H 1 0\n") == ErrorKind::Input);                            // no header
    CHECK(input_kind("arrangement central dim=2\nH 1 0 = 1\n") == ErrorKind::Input);
    CHECK(input_kind("arrangement weird dim=2\n") == ErrorKind::Input);
    CHECK(input_kind("arrangement central dim=2\nplane 1 0\n") == ErrorKind::Input);
    CHECK(input_kind("arrangement central dim=x\n") == ErrorKind::Input);

    ParsedArrangement affine_but_central = parse_arrangement("arrangement affine dim=1\nH 1 = 0\n");
    CHECK(affine_but_central.arrangement.central());
    CHECK(affine_but_central.warnings.size() == 1);
}
