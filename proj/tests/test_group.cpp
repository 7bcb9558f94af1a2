#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "q8tc/group.hpp"

using namespace q8tc;

TEST_CASE("q8 multiplication table rows")
{
    const GroupTable q = GroupTable::quaternion();
    CHECK(q.order() == 8);
    CHECK(q.mul(0, 5) == 5);
    CHECK(q.mul(4, 4) == 2);
    CHECK(q.mul(1, 4) == 5);

    const int row1[] = {1, 2, 3, 0, 5, 6, 7, 4};
    const int row4[] = {4, 7, 6, 5, 2, 1, 0, 3};
    for (int h = 0; h < 8; ++h) {
        CHECK(q.mul(1, h) == row1[h]);
        CHECK(q.mul(4, h) == row4[h]);
    }
}

TEST_CASE("inverses")
{
    const GroupTable q = GroupTable::quaternion();
    const int inv[] = {0, 3, 2, 1, 6, 7, 4, 5};
    for (int g = 0; g < 8; ++g) {
        CHECK(q.inverse(g) == inv[g]);
        CHECK(q.mul(g, q.inverse(g)) == 0);
        CHECK(q.inverse(q.inverse(g)) == g);
    }
}

TEST_CASE("adjoint is g^-1 h g")
{
    const GroupTable q = GroupTable::quaternion();
    CHECK(q.adjoint(4, 1) == 3);
    CHECK(q.adjoint(1, 1) == 1);
    for (int g = 0; g < 8; ++g) {
        CHECK(q.adjoint(g, 0) == 0);
        for (int h = 0; h < 8; ++h) CHECK(q.adjoint(g, h) == q.mul(q.inverse(g), q.mul(h, g)));
    }
}

TEST_CASE("alpha and beta read off the exponents")
{
    const GroupTable q = GroupTable::quaternion();
    CHECK(q.alpha(3));
    CHECK(q.beta(6));
    CHECK_FALSE(q.alpha(0));
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 2; ++n) {
            const Element g = static_cast<Element>(m + 4 * n);
            CHECK(q.alpha(g) == (m % 2 == 1));
            CHECK(q.beta(g) == (n == 1));
        }
}

TEST_CASE("alpha and beta are conjugation invariant")
{
    const GroupTable q = GroupTable::quaternion();
    for (int g = 0; g < 8; ++g)
        for (int h = 0; h < 8; ++h) {
            CHECK(q.alpha(q.adjoint(g, h)) == q.alpha(h));
            CHECK(q.beta(q.adjoint(g, h)) == q.beta(h));
        }
}

TEST_CASE("group axioms hold exhaustively")
{
    const GroupTable q = GroupTable::quaternion();
    for (int g = 0; g < 8; ++g) {
        CHECK(q.mul(0, g) == g);
        CHECK(q.mul(g, 0) == g);
        for (int h = 0; h < 8; ++h)
            for (int k = 0; k < 8; ++k) CHECK(q.mul(q.mul(g, h), k) == q.mul(g, q.mul(h, k)));
    }
    CHECK(q.gen_a() == 1);
    CHECK(q.gen_b() == 4);
    CHECK(q.gen_ab() == 5);
    CHECK(q.word_order() == std::vector<Element>{7, 3, 6, 2, 5, 1, 4});
}

TEST_CASE("range checks")
{
    const GroupTable q = GroupTable::quaternion();
    CHECK_THROWS_AS(q.mul(8, 0), std::out_of_range);
    CHECK_THROWS_AS(q.inverse(9), std::out_of_range);
    CHECK_THROWS_AS(q.adjoint(0, 8), std::out_of_range);
    CHECK_THROWS_AS(q.alpha(8), std::out_of_range);
    CHECK_THROWS_AS(q.name(200), std::out_of_range);
}

TEST_CASE("json round trip and derived inverse")
{
    const GroupTable q = GroupTable::quaternion();
    nlohmann::json doc = q.to_json();
    CHECK(GroupTable::from_json(doc).to_json() == doc);

    doc.erase("inv");
    CHECK(GroupTable::from_json(doc).to_json() == q.to_json());

    const auto path = std::filesystem::temp_directory_path() / "q8tc_group_test.json";
    std::ofstream(path) << q.to_json().dump();
    CHECK(GroupTable::load(path).to_json() == q.to_json());
    std::filesystem::remove(path);
}

TEST_CASE("bad tables are rejected")
{
    auto z2 = [] {
        GroupTable::Spec s;
        s.mul = {{0, 1}, {1, 0}};
        s.alpha = {0, 1};
        s.beta = {0, 0};
        s.generators = {1, 1};
        return s;
    };
    CHECK_NOTHROW(GroupTable{z2()});

    auto s = z2();
    s.mul = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(GroupTable{s}, std::invalid_argument);

    s = z2();
    s.alpha = {0};
    CHECK_THROWS_AS(GroupTable{s}, std::invalid_argument);

    s = z2();
    s.inv = {0, 0};
    CHECK_THROWS_AS(GroupTable{s}, std::invalid_argument);

    // Z3 with a non-associative twist in one entry
    GroupTable::Spec t;
    t.mul = {{0, 1, 2}, {1, 2, 0}, {2, 0, 2}};
    t.alpha = {0, 0, 0};
    t.beta = {0, 0, 0};
    t.generators = {1, 1};
    CHECK_THROWS_AS(GroupTable{t}, std::invalid_argument);

    nlohmann::json doc = GroupTable::quaternion().to_json();
    doc.erase("alpha");
    CHECK_THROWS_AS(GroupTable::from_json(doc), std::invalid_argument);
}
