#include "doctest.h"

#include "orbitatlas/subsystem.hpp"
#include "orbitatlas/tableaux.hpp"

using namespace orbitatlas;

static Vec qv(std::initializer_list<const char*> xs) {
    Vec v;
    for (auto s : xs) v.push_back(Rational::parse(s));
    return v;
}

TEST_CASE("D8 worked example: D4 x A3") {
    const auto& d8 = standard_system(Type::D, 8);
    Vec lam = qv({"2", "1", "1.1", "3", "0.9", "1.9", "4", "2.1"});
    auto pos = integral_subsystem(d8, lam);
    CHECK(pos.size() == 12 + 6); // ε_i ± ε_j on {1,2,4,7} plus six more
    auto comps = decompose_and_classify(d8, pos);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].name() == "D4");
    CHECK(comps[1].name() == "A3");
    CHECK(comps[0].simple_roots.size() == 4);
    auto lp_d4 = restrict_weight(comps[0], lam);
    auto lp_a3 = restrict_weight(comps[1], lam);
    CHECK(a_value_classical(lp_d4, Type::D) == 3);
    CHECK(a_value_classical(lp_a3, Type::A) == 2);
}

TEST_CASE("F4 worked example: C4 with simple roots {α2, α3, α4, ε2}") {
    const auto& f4 = standard_system(Type::F4);
    Vec lam = qv({"4", "5", "3/2", "1/2"});
    auto comps = decompose_integral(f4, lam);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].name() == "C4");
    CHECK(comps[0].positive_roots.size() == 16);
    Vec lp = restrict_weight(comps[0], lam);
    CHECK(lp == qv({"9", "-1", "2", "1"}));
    CHECK(a_value_classical(lp, Type::C) == 9);
}

TEST_CASE("F4 second worked example: B3 x Ã1") {
    const auto& f4 = standard_system(Type::F4);
    Vec lam = qv({"7/4", "1/4", "5/4", "-3/4"});
    auto comps = decompose_integral(f4, lam);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].name() == "B3");
    CHECK(comps[1].name() == "Ã1");
    auto lp_b3 = restrict_weight(comps[0], lam);
    auto lp_a1 = restrict_weight(comps[1], lam);
    CHECK(a_value_classical(lp_b3, Type::B) == 4);
    CHECK(a_value_classical(lp_a1, Type::A) == 1);
}

TEST_CASE("E7 worked example: A7") {
    const auto& e7 = standard_system(Type::E7);
    Vec lam = qv({"1/4", "1/4", "1/4", "1/4", "1/4", "-3/4", "-1", "1"});
    auto comps = decompose_integral(e7, lam);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].name() == "A7");
    Vec lp = restrict_weight(comps[0], lam);
    CHECK(rs_shape(lp) == Partition{6, 1, 1});
    CHECK(a_value_classical(lp, Type::A) == 3);
}

TEST_CASE("E6 worked example: D5") {
    const auto& e6 = standard_system(Type::E6);
    Vec lam = qv({"1", "2", "1", "4", "4.5", "0.5", "0.5", "-0.5"});
    auto comps = decompose_integral(e6, lam);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].name() == "D5");
    Vec lp = restrict_weight(comps[0], lam);
    CHECK(a_value_classical(lp, Type::D) == 7);
}

TEST_CASE("E8 worked example: D8") {
    const auto& e8 = standard_system(Type::E8);
    Vec lam = qv({"1/4", "5/4", "9/4", "13/4", "9/4", "1/4", "5/4", "9/4"});
    auto comps = decompose_integral(e8, lam);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].name() == "D8");
    Vec lp = restrict_weight(comps[0], lam);
    CHECK(a_value_classical(lp, Type::D) == 17);
}

TEST_CASE("E8 worked example: E7 x A1") {
    const auto& e8 = standard_system(Type::E8);
    Vec lam = qv({"1/2", "-3/2", "-3", "-2", "-1", "-4", "-5", "-19"});
    auto comps = decompose_integral(e8, lam);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].name() == "E7");
    CHECK(comps[1].name() == "A1");
    auto lp_a1 = restrict_weight(comps[1], lam);
    CHECK(a_value_classical(lp_a1, Type::A) == 0);
    // the E7 part reduces by s4 s2 s4
    auto k = restrict_pattern(comps[0], lam);
    auto red = positive_index_reduction_k(k, comps[0].model->cartan);
    CHECK(red.w.letters == std::vector<int>{4, 2, 4});
}

TEST_CASE("E7 general-case example: D4 x A1 x A1") {
    const auto& e7 = standard_system(Type::E7);
    Vec lam = qv({"0", "1/4", "1/4", "1/2", "3/4", "3/4", "-7/4", "7/4"});
    auto comps = decompose_integral(e7, lam);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].name() == "D4");
    CHECK(comps[1].name() == "A1");
    CHECK(comps[2].name() == "A1");
    CHECK(special_partition_of_weight(restrict_weight(comps[0], lam), Type::D) ==
          Partition{3, 1, 1, 1, 1, 1});
}

TEST_CASE("integral weight gives the whole system") {
    const auto& f4 = standard_system(Type::F4);
    Vec lam = qv({"3", "1", "1", "0"});
    auto comps = decompose_integral(f4, lam);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].name() == "F4");
    CHECK(comps[0].positive_roots.size() == 24);
}

TEST_CASE("components are pairwise orthogonal") {
    const auto& e8 = standard_system(Type::E8);
    Vec lam = qv({"1/2", "-3/2", "-3", "-2", "-1", "-4", "-5", "-19"});
    auto comps = decompose_integral(e8, lam);
    for (size_t a = 0; a < comps.size(); ++a)
        for (size_t b = a + 1; b < comps.size(); ++b)
            for (const auto& x : comps[a].positive_roots)
                for (const auto& y : comps[b].positive_roots)
                    CHECK(dot(x, y).is_zero());
}

TEST_CASE("phi respects the Cartan matrix") {
    const auto& f4 = standard_system(Type::F4);
    Vec lam = qv({"4", "5", "3/2", "1/2"});
    auto comps = decompose_integral(f4, lam);
    const auto& c = comps[0];
    for (int i = 0; i < c.rank; ++i)
        for (int j = 0; j < c.rank; ++j) {
            long long sub = pairing(c.simple_roots[i], c.simple_roots[j]).to_integer();
            CHECK(sub == c.model->cartan[c.phi[i]][c.phi[j]]);
        }
}

TEST_CASE("pseudo-maximal templates") {
    const auto& f4 = standard_system(Type::F4);
    auto comps = decompose_integral(f4, qv({"4", "5", "3/2", "1/2"}));
    auto pm = pseudo_maximal_check(Type::F4, comps);
    CHECK(pm.pseudo_maximal);
    CHECK(pm.matched == "C4");

    const auto& e7 = standard_system(Type::E7);
    auto comps2 = decompose_integral(e7, qv({"0", "1/4", "1/4", "1/2", "3/4", "3/4", "-7/4", "7/4"}));
    CHECK_FALSE(pseudo_maximal_check(Type::E7, comps2).pseudo_maximal);
}

TEST_CASE("generate subsystem from explicit simple roots") {
    const auto& e7 = standard_system(Type::E7);
    // standard A7 inside E7: α0-α1-α3-α4-α5-α6-α7
    std::vector<Vec> simples{scale(Rational(-1), e7.highest_root)};
    for (int i : {1, 3, 4, 5, 6, 7}) simples.push_back(e7.simple_roots[i - 1]);
    auto pos = generate_subsystem(e7, simples);
    CHECK(pos.size() == 28);
    auto comps = decompose_and_classify(e7, pos);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].name() == "A7");
}
