#include "doctest.h"

#include "orbitatlas/rootdata.hpp"

using namespace orbitatlas;

static Vec qv(std::initializer_list<const char*> xs) {
    Vec v;
    for (auto s : xs) v.push_back(Rational::parse(s));
    return v;
}

TEST_CASE("positive root counts") {
    CHECK(standard_system(Type::G2).num_positive() == 6);
    CHECK(standard_system(Type::F4).num_positive() == 24);
    CHECK(standard_system(Type::E6).num_positive() == 36);
    CHECK(standard_system(Type::E7).num_positive() == 63);
    CHECK(standard_system(Type::E8).num_positive() == 120);
    CHECK(standard_system(Type::A, 5).num_positive() == 15);
    CHECK(standard_system(Type::B, 3).num_positive() == 9);
    CHECK(standard_system(Type::C, 4).num_positive() == 16);
    CHECK(standard_system(Type::D, 8).num_positive() == 56);
    CHECK_THROWS_WITH_AS(build_root_system(Type::D, 3), "unknown root system",
                         std::invalid_argument);
}

TEST_CASE("highest roots and marks") {
    const auto& f4 = standard_system(Type::F4);
    CHECK(f4.highest_root == qv({"1", "1", "0", "0"}));
    CHECK(f4.marks == std::vector<long long>{2, 3, 4, 2});
    const auto& e8 = standard_system(Type::E8);
    CHECK(e8.marks == std::vector<long long>{2, 3, 4, 6, 5, 4, 3, 2});
    const auto& e7 = standard_system(Type::E7);
    CHECK(e7.marks == std::vector<long long>{2, 2, 3, 4, 3, 2, 1});
    const auto& e6 = standard_system(Type::E6);
    CHECK(e6.marks == std::vector<long long>{1, 2, 2, 3, 2, 1});
    const auto& g2 = standard_system(Type::G2);
    CHECK(g2.marks == std::vector<long long>{3, 2});
}

TEST_CASE("every positive root is a nonnegative integer combination of simples") {
    for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8}) {
        const auto& rs = standard_system(t);
        std::vector<Vec> rows(rs.coordinate_dim, Vec(rs.rank));
        for (int d = 0; d < rs.coordinate_dim; ++d)
            for (int j = 0; j < rs.rank; ++j) rows[d][j] = rs.simple_roots[j][d];
        for (const auto& a : rs.positive_roots) {
            Vec c = solve_linear(rows, a);
            for (const auto& x : c) {
                CHECK(x.is_integer());
                CHECK(x.num() >= 0);
            }
        }
    }
}

TEST_CASE("cartan matrices") {
    const auto& f4 = standard_system(Type::F4);
    for (int i = 0; i < 4; ++i) CHECK(f4.cartan[i][i] == 2);
    // F4 double bond between α2 and α3
    CHECK(f4.cartan[1][2] == -2);
    CHECK(f4.cartan[2][1] == -1);
    const auto& g2 = standard_system(Type::G2);
    CHECK(g2.cartan[1][0] == -3);
    CHECK(g2.cartan[0][1] == -1);
    for (Type t : {Type::E6, Type::E7, Type::E8}) {
        const auto& rs = standard_system(t);
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) {
                if (i == j)
                    CHECK(rs.cartan[i][j] == 2);
                else
                    CHECK((rs.cartan[i][j] == 0 || rs.cartan[i][j] == -1));
            }
    }
}

TEST_CASE("pairings match the worked formulas") {
    const auto& f4 = standard_system(Type::F4);
    Vec lam = qv({"4", "5", "3/2", "1/2"});
    // ⟨λ, ε_i∨⟩ = 2λ_i
    Vec eps2 = qv({"0", "1", "0", "0"});
    CHECK(pairing(lam, eps2) == Rational(10));
    const auto& e7 = standard_system(Type::E7);
    Vec mu = qv({"2", "-1", "0", "-5", "-6", "-8", "12", "-12"});
    CHECK(pairing(mu, e7.simple_roots[0]) ==
          (mu[0] - mu[1] - mu[2] - mu[3] - mu[4] - mu[5] - mu[6] + mu[7]) * Rational(1, 2));
    CHECK(e7.is_integral(mu));
    CHECK_FALSE(f4.is_integral(lam));
    Vec zero(4, Rational(0));
    CHECK(f4.is_integral(zero));
    CHECK(f4.is_antidominant(zero));
}

TEST_CASE("rho pairs to one exactly on simple roots") {
    for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8}) {
        const auto& rs = standard_system(t);
        Vec rho(rs.coordinate_dim, Rational(0));
        for (const auto& w : rs.fundamental_weights) rho = add(rho, w);
        int simple_count = 0;
        for (const auto& a : rs.positive_roots) {
            Rational p = pairing(rho, a);
            CHECK(p.is_integer());
            CHECK(p.num() >= 1);
            if (p == Rational(1)) ++simple_count;
        }
        CHECK(simple_count == rs.rank);
    }
    for (auto [t, n] : std::initializer_list<std::pair<Type, int>>{
             {Type::A, 4}, {Type::B, 3}, {Type::C, 3}, {Type::D, 5}}) {
        const auto& rs = standard_system(t, n);
        Vec rho(rs.coordinate_dim, Rational(0));
        for (const auto& w : rs.fundamental_weights) rho = add(rho, w);
        int simple_count = 0;
        for (const auto& a : rs.positive_roots)
            if (pairing(rho, a) == Rational(1)) ++simple_count;
        CHECK(simple_count == rs.rank);
    }
}

TEST_CASE("simple reflections permute the root set") {
    for (Type t : {Type::G2, Type::F4, Type::E6}) {
        const auto& rs = standard_system(t);
        for (const auto& s : rs.simple_roots) {
            for (const auto& a : rs.positive_roots) {
                Vec img = sub(a, scale(pairing(a, s), s));
                bool found = false;
                for (const auto& b : rs.positive_roots) {
                    if (img == b || img == scale(Rational(-1), b)) { found = true; break; }
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("extended diagram marks") {
    auto ed = extended_diagram(standard_system(Type::F4));
    CHECK(ed.marks == std::vector<long long>{1, 2, 3, 4, 2});
    CHECK(ed.nodes.size() == 5);
    auto e8 = extended_diagram(standard_system(Type::E8));
    CHECK(e8.marks == std::vector<long long>{1, 2, 3, 4, 6, 5, 4, 3, 2});
    auto a1 = extended_diagram(standard_system(Type::A, 1));
    CHECK(a1.nodes.size() == 2);
}

TEST_CASE("weight invariants enforced") {
    const auto& e6 = standard_system(Type::E6);
    CHECK_THROWS(e6.validate_weight(qv({"1", "2", "1", "4", "9/2", "1/2", "1/2", "1/2"})));
    e6.validate_weight(qv({"1", "2", "1", "4", "9/2", "1/2", "1/2", "-1/2"}));
    const auto& g2 = standard_system(Type::G2);
    CHECK_THROWS(g2.validate_weight(qv({"1", "1", "1"})));
    g2.validate_weight(qv({"1", "1", "-2"}));
}

TEST_CASE("fundamental weight coefficients recover pairings") {
    const auto& e7 = standard_system(Type::E7);
    Vec mu = e7.weight_from_fund({Rational(-1), Rational(1), Rational(-3), Rational(1),
                                  Rational(-5), Rational(-1), Rational(-2)});
    auto k = e7.integrality_pattern(mu);
    CHECK(k == std::vector<Rational>{Rational(-1), Rational(1), Rational(-3), Rational(1),
                                     Rational(-5), Rational(-1), Rational(-2)});
    // published coordinates for this weight
    CHECK(mu == qv({"2", "-1", "0", "-5", "-6", "-8", "12", "-12"}));
}
