#include "doctest.h"

#include <random>

#include "orbitatlas/tableaux.hpp"

using namespace orbitatlas;

static std::vector<Rational> qs(std::initializer_list<const char*> xs) {
    std::vector<Rational> v;
    for (auto s : xs) v.push_back(Rational::parse(s));
    return v;
}

TEST_CASE("rs shapes") {
    // E7 A7 worked example
    CHECK(rs_shape(qs({"7/8", "-1/8", "-1/8", "-1/8", "-1/8", "-1/8", "7/8", "-9/8"})) ==
          Partition{6, 1, 1});
    CHECK(rs_shape(qs({"1", "2", "3", "4"})) == Partition{4});
    CHECK(rs_shape(qs({"4", "3", "2", "1"})) == Partition{1, 1, 1, 1});
    CHECK(rs_shape(qs({"1", "2", "-2", "-1"})) == Partition{2, 2});
    CHECK(rs_shape({}) == Partition{});
}

TEST_CASE("doubling") {
    CHECK(doubled(qs({"1", "2"})) == qs({"1", "2", "-2", "-1"}));
    CHECK(doubled({}) == std::vector<Rational>{});
    CHECK(doubled(qs({"9", "-1", "2", "1"})) == qs({"9", "-1", "2", "1", "-1", "-2", "1", "-9"}));
}

TEST_CASE("a-values of the worked weights") {
    CHECK(a_value_classical(qs({"9", "-1", "2", "1"}), Type::C) == 9);
    CHECK(a_value_classical(qs({"-3", "3", "2", "3", "0"}), Type::D) == 7);
    CHECK(a_value_classical(qs({"-1", "3", "2", "1", "0", "1", "3", "2"}), Type::D) == 17);
    CHECK(a_value_classical(qs({"7/8", "-1/8", "-1/8", "-1/8", "-1/8", "-1/8", "7/8", "-9/8"}),
                            Type::A) == 3);
    CHECK(a_value_classical(qs({"2", "1", "3", "4"}), Type::D) == 3);
    CHECK(a_value_classical(qs({"1", "2", "-2", "-1"}), Type::A) == 2);
    CHECK(a_value_classical(qs({"2", "0", "1"}), Type::B) == 4);
    CHECK(a_value_classical(qs({"1/2", "-1/2"}), Type::A) == 1);
    CHECK(a_value_classical(qs({"-1/2", "1/2"}), Type::A) == 0);
}

TEST_CASE("h algorithm reproduces the published special partitions") {
    auto lam = qs({"9", "-1", "2", "1"});
    CHECK(special_partition_of_weight(lam, Type::C) == Partition{2, 2, 1, 1, 1, 1});
    CHECK(special_partition_of_weight(lam, Type::B) == Partition{3, 1, 1, 1, 1, 1, 1});
    CHECK(special_partition_of_weight(qs({"-11", "-9", "-7", "-5", "3", "1"}), Type::D) ==
          Partition{9, 1, 1, 1});
    CHECK(special_partition_of_weight(qs({"2", "1", "0", "0"}), Type::D) ==
          Partition{3, 1, 1, 1, 1, 1});
}

TEST_CASE("h algorithm preserves boxes and is idempotent on special partitions") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 5;
        std::vector<Rational> lam(n);
        for (auto& x : lam) x = Rational(val(rng));
        Partition shape = rs_shape(doubled(lam));
        for (Type x : {Type::C, Type::D}) {
            Partition sp = h_algorithm(shape, x, 2 * n);
            CHECK(is_special_partition(sp, x));
            auto boxes = (x == Type::D) ? even_boxes(shape) : odd_boxes(shape);
            auto boxes2 = (x == Type::D) ? even_boxes(sp) : odd_boxes(sp);
            while (!boxes.empty() && boxes.back() == 0) boxes.pop_back();
            while (!boxes2.empty() && boxes2.back() == 0) boxes2.pop_back();
            CHECK(boxes == boxes2);
            CHECK(h_algorithm(sp, x, 2 * n) == sp);
            CHECK(a_value_partition(sp, x) == a_value_partition(shape, x));
        }
        Partition spb = h_algorithm(shape, Type::B, 2 * n + 1);
        CHECK(is_special_partition(spb, Type::B));
        CHECK(a_value_partition(spb, Type::B) == a_value_partition(shape, Type::B));
    }
}

TEST_CASE("dual shift from C-special to B-special") {
    CHECK(dual_shift_bc({2, 2, 1, 1, 1, 1}) == Partition{3, 1, 1, 1, 1, 1, 1});
    CHECK(dual_shift_bc({2, 2, 2, 2}) == Partition{3, 2, 2, 1, 1});
    CHECK(dual_shift_bc({4, 2, 2}) == Partition{5, 2, 2});
}

TEST_CASE("shape size equals sequence length") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int trial = 0; trial < 500; ++trial) {
        int n = rng() % 9;
        std::vector<Rational> x(n);
        for (auto& v : x) v = Rational(val(rng), 1 + (int)(rng() % 3));
        CHECK(partition_size(rs_shape(x)) == n);
    }
}
