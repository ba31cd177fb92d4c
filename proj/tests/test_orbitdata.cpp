#include "doctest.h"

#include <set>

#include "orbitatlas/klcells.hpp"
#include "orbitatlas/orbitdata.hpp"

using namespace orbitatlas;

TEST_CASE("catalog sizes and special counts") {
    const auto& d = orbit_data();
    CHECK(d.orbits(Type::G2).size() == 5);
    CHECK(d.orbits(Type::F4).size() == 16);
    CHECK(d.orbits(Type::E6).size() == 21);
    CHECK(d.orbits(Type::E7).size() == 45);
    CHECK(d.orbits(Type::E8).size() == 70);
    auto specials = [&](Type t) {
        int n = 0;
        for (const auto& o : d.orbits(t)) n += o.special;
        return n;
    };
    CHECK(specials(Type::G2) == 3);
    CHECK(specials(Type::F4) == 11);
    CHECK(specials(Type::E6) == 17);
    CHECK(specials(Type::E7) == 35);
    CHECK(specials(Type::E8) == 46);
}

TEST_CASE("orbits by dimension") {
    const auto& d = orbit_data();
    auto f42 = d.special_orbits_by_dim(Type::F4, 42);
    REQUIRE(f42.size() == 2);
    CHECK(((f42[0]->label == "B3" && f42[1]->label == "C3") ||
           (f42[0]->label == "C3" && f42[1]->label == "B3")));
    auto f48 = d.special_orbits_by_dim(Type::F4, 48);
    REQUIRE(f48.size() == 1);
    CHECK(f48[0]->label == "F4");
    auto e80 = d.special_orbits_by_dim(Type::E8, 0);
    REQUIRE(e80.size() == 1);
    CHECK(e80[0]->label == "0");
    // dim 36 in F4 holds two non-special orbits and no special one
    CHECK(d.special_orbits_by_dim(Type::F4, 36).empty());
    CHECK(d.orbits_by_dim(Type::F4, 36).size() == 2);
    // dim 94 in E7: one special, one not
    CHECK(d.orbits_by_dim(Type::E7, 94).size() == 2);
    CHECK(d.special_orbits_by_dim(Type::E7, 94).size() == 1);
}

TEST_CASE("all orbit dimensions are even and labels unique") {
    const auto& d = orbit_data();
    for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8}) {
        std::set<std::string> seen;
        for (const auto& o : d.orbits(t)) {
            CHECK(o.dim % 2 == 0);
            CHECK(seen.insert(normalize_label(o.label)).second);
        }
    }
}

TEST_CASE("springer characters") {
    const auto& d = orbit_data();
    CHECK(d.springer_char(Type::F4, "F4(a2)") == "9_1");
    CHECK(d.orbit(Type::F4, "F4(a2)").alt_name == "φ_{9,2}");
    CHECK(d.springer_char(Type::E7, "A6") == "105_b");
    CHECK(d.orbit(Type::E7, "A6").dim == 114);
    CHECK(d.springer_char(Type::E8, "0") == "1_x'");
    CHECK(d.springer_char(Type::F4, "F4") == "1_1");
    CHECK_THROWS_WITH_AS(d.springer_char(Type::E7, "(3A1)'"), "character undefined",
                         std::domain_error);
    // char -> orbit inverse on all named characters
    for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8})
        for (const auto& o : d.orbits(t))
            if (!o.character.empty())
                CHECK(d.orbit_of_char(t, o.character).label == o.label);
}

TEST_CASE("sommers duality data") {
    const auto& d = orbit_data();
    CHECK(d.sommers_dual(Type::F4, "B3") == "A2");
    CHECK(d.sommers_dual(Type::F4, "2A1+Ã1") == "B3");
    CHECK(d.sommers_dual(Type::E8, "(4A1)''") == "E7");
    CHECK(d.sommers_dual(Type::E8, "A2+4A1") == "D7");
    CHECK(d.sommers_dual(Type::E7, "(3A1)''") == "E6");
    CHECK_THROWS_AS((void)d.sommers_dual(Type::E8, "3A1"), std::domain_error);
    CHECK_FALSE(d.has_sommers(Type::E8, "3A1"));
}

TEST_CASE("exceptional LS duality is involutive and special") {
    const auto& d = orbit_data();
    CHECK(d.ls_dual_exceptional(Type::E7, "A6") == "A2+3A1");
    CHECK(d.ls_dual_exceptional(Type::E6, "A2") == "E6(a3)");
    CHECK(d.ls_dual_exceptional(Type::E6, "0") == "E6");
    for (Type t : {Type::E6, Type::E7}) {
        for (const auto& o : d.orbits(t)) {
            if (!o.special) continue;
            auto dual = d.ls_dual_exceptional(t, o.label);
            CHECK(d.orbit(t, dual).special);
            CHECK(d.ls_dual_exceptional(t, dual) == normalize_label(o.label));
        }
    }
}

TEST_CASE("decorated diagram rows") {
    const auto& d = orbit_data();
    auto rows = d.decorated_rows(Type::E7, parse_bc_label("A3+2A1"));
    REQUIRE(rows.size() == 2);
    bool primed = false, doubly = false;
    for (auto* r : rows) {
        if (r->pair_label == "(A3+2A1)'") {
            primed = true;
            CHECK(r->diagram == std::vector<int>{0, 0, 2, 0, 0, 0, 0});
            CHECK(r->saturation == "D4(a1)");
        }
        if (r->pair_label == "(A3+2A1)''") doubly = true;
    }
    CHECK(primed);
    CHECK(doubly);
    auto e8rows = d.decorated_rows(Type::E8, parse_bc_label("4A1"));
    REQUIRE(e8rows.size() == 2);
    for (auto* r : e8rows)
        if (r->pair_label == "(4A1)''")
            CHECK(r->diagram == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 2});
    for (const auto& amb : {Type::F4, Type::E7, Type::E8})
        for (auto* r : d.decorated_rows(amb, parse_bc_label("A2")))
            for (int v : r->diagram) CHECK((v == 0 || v == 1 || v == 2));
}

TEST_CASE("ambiguity lists") {
    const auto& d = orbit_data();
    CHECK(d.is_ambiguous_label(Type::E8, parse_bc_label("A3+2A1")));
    CHECK(d.is_ambiguous_label(Type::E8, parse_bc_label("(A7)'")));
    CHECK(d.is_ambiguous_label(Type::E7, parse_bc_label("3A1")));
    CHECK_FALSE(d.is_ambiguous_label(Type::E8, parse_bc_label("3A1")));
    CHECK_FALSE(d.is_ambiguous_label(Type::E8, parse_bc_label("A2+4A1")));
    CHECK_FALSE(d.is_ambiguous_label(Type::E6, parse_bc_label("4A1")));
}

TEST_CASE("appendix rows parse and satisfy the Joseph identity") {
    const auto& d = orbit_data();
    CHECK(d.appendix().size() > 280);
    for (const auto& row : d.appendix()) {
        const Orbit& o = d.orbit(row.ambient, row.orbit);
        CHECK(o.dim == 2ll * row.gkd);
    }
    auto tabc4 = d.appendix_table("tabc4");
    CHECK(tabc4.size() == 3);
    CHECK(tabc4[0]->factors[0].type == Type::C);
    CHECK(tabc4[0]->factors[0].rank == 4);
}

TEST_CASE("classical special representation factors really are special") {
    const auto& d = orbit_data();
    for (const auto& row : d.appendix()) {
        for (const auto& f : row.factors) {
            if (f.exceptional) continue;
            INFO(row.table, " gkd ", row.gkd);
            CHECK(partition_size(f.parts) ==
                  (f.type == Type::A ? f.rank + 1 : f.type == Type::B ? 2 * f.rank + 1 : 2 * f.rank));
            CHECK(is_special_partition(f.parts, f.type));
            if (f.numeral != Numeral::None) CHECK(is_very_even(f.parts));
        }
    }
}

TEST_CASE("a-value lists match enumeration of special partitions") {
    const auto& d = orbit_data();
    std::map<std::pair<std::string, int>, std::map<Partition, long long>> listed;
    for (const auto& r : d.a_value_rows()) {
        std::string t = r.type == Type::A ? "A" : r.type == Type::B ? "B" : r.type == Type::C ? "C" : "D";
        listed[{t, r.rank}][r.partition] = r.a;
    }
    CHECK(listed.size() == 13);
    for (auto& [keyv, rows] : listed) {
        auto [tname, rank] = keyv;
        Type t = tname == "A" ? Type::A : tname == "B" ? Type::B : tname == "C" ? Type::C : Type::D;
        int size = t == Type::A ? rank + 1 : t == Type::B ? 2 * rank + 1 : 2 * rank;
        std::map<Partition, long long> computed;
        enumerate_partitions(size, [&, t = t](const Partition& p) {
            if (!is_special_partition(p, t)) return;
            computed[p] = a_value_partition(p, t);
        });
        INFO(tname, rank);
        // every published pair is reproduced exactly
        for (auto& [p, a] : rows) {
            REQUIRE(computed.count(p));
            CHECK(computed.at(p) == a);
        }
        if (tname == "C" && rank == 4) {
            // the published C4 list omits one special partition; the Weyl
            // group of C4 has ten two-sided cells, two of them with a = 4
            CHECK(computed.size() == rows.size() + 1);
            CHECK(computed.count({3, 3, 2}));
            CHECK(computed.at({3, 3, 2}) == 4);
        } else {
            CHECK(computed == rows);
        }
    }
}

TEST_CASE("special partition counts match two-sided cell counts") {
    for (auto [t, n] : std::initializer_list<std::pair<Type, int>>{
             {Type::B, 2}, {Type::B, 3}, {Type::C, 3}, {Type::B, 4}, {Type::C, 4}, {Type::D, 4},
             {Type::D, 5}}) {
        HeckeEngine eng(standard_system(t, n).cartan);
        int size = t == Type::B ? 2 * n + 1 : 2 * n;
        size_t specials = 0;
        std::set<long long> avalues;
        enumerate_partitions(size, [&, t = t](const Partition& p) {
            if (!is_special_partition(p, t)) return;
            ++specials;
            avalues.insert(a_value_partition(p, t));
        });
        // very even partitions label two orbits but one Weyl-group family
        if (t == Type::D) {
            enumerate_partitions(size, [&, t = t](const Partition& p) {
                if (is_special_partition(p, t) && is_very_even(p)) ++specials;
            });
        }
        INFO(type_name(t, n));
        CHECK(specials == eng.num_two_sided_cells());
        std::set<long long> cell_a;
        for (size_t c = 0; c < eng.num_two_sided_cells(); ++c) cell_a.insert(eng.cell_a(c));
        CHECK(avalues == cell_a);
    }
}

TEST_CASE("supplement files") {
    OrbitData d;
    CHECK_THROWS(d.load_supplement_text("lsdual\tE6\tA2\tE6(a3)\n"));
    d.load_supplement_text(
        "source=unit-test\n"
        "sommers\tE8\t3A1\tE8(a2)\n"
        "lsdual\tE6\tA2\tE6(a3)\n"
        "wdd\tE8\t(A7)'\t(A7)'\t1,0,0,1,0,1,1,0\n");
    CHECK(d.sommers_dual(Type::E8, "3A1") == "E8(a2)");
    // conflicting supplement entry is rejected
    CHECK_THROWS(d.load_supplement_text("source=unit-test\nsommers\tF4\tB3\tC3\n"));
}

namespace {

// dim of the orbit with weighted diagram d: dim g - dim g0 - dim g1
long long dim_from_diagram(const RootSystem& rs, const std::vector<int>& d) {
    Vec hstar(rs.coordinate_dim, Rational(0));
    for (int i = 0; i < rs.rank; ++i)
        hstar = add(hstar, scale(Rational(d[i]), rs.fundamental_weights[i]));
    long long zero = 0, one_pos = 0;
    for (const auto& a : rs.positive_roots) {
        Rational p = pairing(hstar, a);
        if (p.is_zero()) zero += 2;
        if (p == Rational(1)) ++one_pos;
    }
    return 2 * (long long)rs.num_positive() - zero - one_pos;
}

} // namespace

TEST_CASE("decorated diagrams are dimension-consistent with their saturations") {
    const auto& d = orbit_data();
    for (Type amb : {Type::E7, Type::E8}) {
        const auto& rs = standard_system(amb);
        for (const char* lbl : {"A7", "A5", "A5+A1", "4A1", "3A1", "2A3", "A3+2A1", "A3+A1"}) {
            for (const auto* row : d.decorated_rows(amb, parse_bc_label(lbl))) {
                std::string sat = row->saturation;
                if (!d.has_orbit(amb, sat)) {
                    auto l = parse_bc_label(sat);
                    l.primes = 0;
                    sat = bc_label_str(l);
                }
                INFO(type_name(amb, 0), " ", row->pair_label);
                CHECK(d.orbit(amb, sat).dim == dim_from_diagram(rs, row->diagram));
            }
        }
    }
}

TEST_CASE("Sommers duality restricted to special Levi pairs is the LS dual") {
    const auto& d = orbit_data();
    for (Type amb : {Type::E6, Type::E7}) {
        int checked = 0;
        for (const auto& o : d.orbits(amb)) {
            if (!o.special) continue;
            // keys naming a special orbit whose Bala-Carter pair is a Levi
            // pair must agree with the ambient Lusztig-Spaltenstein dual
            if (!d.has_sommers(amb, o.label)) continue;
            INFO(type_name(amb, 0), " ", o.label);
            CHECK(d.sommers_dual(amb, o.label) == d.ls_dual_exceptional(amb, o.label));
            ++checked;
        }
        CHECK(checked >= (amb == Type::E6 ? 3 : 15));
    }
}
