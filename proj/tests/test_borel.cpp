#include <doctest.h>

#include "q8tc/borel.hpp"

using namespace q8tc;

namespace {

const GroupTable& q8()
{
    static const GroupTable q = GroupTable::quaternion();
    return q;
}

ProductChain boundary_of(const ProductChain& chain, Variant v)
{
    ProductChain out;
    for (const ProductCell& c : chain) out += product_boundary(q8(), c, v);
    return out;
}

}  // namespace

TEST_CASE("cell counts")
{
    const auto r = Variant::reduced;
    CHECK(CellBasis(q8(), r, 4, 4).size() == 3192);
    CHECK(CellBasis(q8(), r, 5, 4).size() == 5537);
    CHECK(CellBasis(q8(), r, 5, 5).size() == 22344);
    CHECK(CellBasis(q8(), r, 6, 5).size() == 38759);
    CHECK(CellBasis(q8(), Variant::unreduced, 4, 4).size() == 5256);
    CHECK(CellBasis(q8(), Variant::unreduced, 5, 4).size() == 9280);

    // N_d = sum over base tags of 7^(d - dim), truncated by the skeleton
    for (int t = 0; t <= 4; ++t)
        for (int d = 0; d <= 3 + t; ++d) {
            std::size_t n = 0;
            for (CellType c : kCellTypes) {
                const int len = d - type_dimension(c);
                if (len < 0 || len > t) continue;
                std::size_t p = 1;
                for (int i = 0; i < len; ++i) p *= 7;
                n += p;
            }
            CHECK(CellBasis(q8(), r, d, t).size() == n);
        }
}

TEST_CASE("basis order and lookup")
{
    const CellBasis b(q8(), Variant::reduced, 4, 4);
    CHECK(b.at(0).label() == "[e0|7|7|7|7]");
    CHECK(b.at(1).label() == "[e0|7|7|7|3]");
    CHECK(b.at(2401).label() == "[e11|7|7|7]");
    CHECK(b.at(2402).label() == "[e12|7|7|7]");
    CHECK(b.at(b.size() - 1).label() == "[e3|4]");
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.at(i)) == i);

    CHECK_FALSE(b.index_of(ProductCell::parse("[e0|7|7|0|7]")));
    CHECK_FALSE(b.index_of(ProductCell::parse("[e0|7|7|7]")));
    CHECK(cell_index(ProductCell::parse("[e0|7|7|7|6]"), b) == 2);

    CHECK_THROWS_AS(CellBasis(q8(), Variant::reduced, 8, 4), std::invalid_argument);
    CHECK_THROWS_AS(CellBasis(q8(), Variant::reduced, -1, 4), std::invalid_argument);
    CHECK_THROWS_AS(b.at(b.size()), std::out_of_range);
}

TEST_CASE("labels round trip")
{
    for (const char* s : {"[e0|7|7|7|6]", "[e3|3]", "[e21|1|1]", "[e11]"})
        CHECK(ProductCell::parse(s).label() == s);
    CHECK_THROWS_AS(ProductCell::parse("e0|1"), std::invalid_argument);
    CHECK_THROWS_AS(ProductCell::parse("[e9|1]"), std::invalid_argument);
    CHECK_THROWS_AS(ProductCell::parse("[e0|x]"), std::invalid_argument);
    CHECK_THROWS_AS(ProductCell::parse("[e4|1]"), std::invalid_argument);
}

TEST_CASE("product boundary examples")
{
    const auto r = Variant::reduced;
    const ProductChain d = product_boundary(q8(), ProductCell::parse("[e21|1|1]"), r);
    CHECK(d == ProductChain{ProductCell::parse("[e12|1|1]"), ProductCell::parse("[e12|3|3]"),
                            ProductCell::parse("[e21|2]")});
    CHECK(product_boundary(q8(), ProductCell::parse("[e0|1]"), r).empty());
    CHECK(product_boundary(q8(), ProductCell::parse("[e11]"), r).empty());
}

TEST_CASE("boundary squared vanishes through dimension 6")
{
    for (Variant v : {Variant::reduced, Variant::unreduced})
        for (int d = 1; d <= 6; ++d) {
            const CellBasis b(q8(), v, d, d);
            std::size_t bad = 0;
            for (std::size_t i = 0; i < b.size(); ++i)
                bad += !boundary_of(product_boundary(q8(), b.at(i), v), v).empty();
            CAPTURE(d);
            CHECK(bad == 0);
        }
}

TEST_CASE("boundary is independent of the orbit representative")
{
    for (Variant v : {Variant::reduced, Variant::unreduced})
        for (int d = 1; d <= 5; ++d) {
            const CellBasis b(q8(), v, d, d);
            std::size_t bad = 0;
            for (std::size_t i = 0; i < b.size(); ++i) {
                const ProductCell c = b.at(i);
                const ProductChain ref = product_boundary(q8(), c, v);
                for (int g = 1; g < 8; ++g) {
                    // (g sigma, g omega g^-1) is the same orbit as (sigma, omega)
                    const ProductCell moved{c.base, conjugate(q8(), q8().inverse(g), c.word)};
                    bad += product_boundary_at(q8(), static_cast<Element>(g), moved, v) != ref;
                }
            }
            CAPTURE(d);
            CHECK(bad == 0);
        }
}

TEST_CASE("boundary matrix matches product_boundary")
{
    const auto r = Variant::reduced;
    const CellBasis lo(q8(), r, 2, 2), hi(q8(), r, 3, 2);
    const BitMatrix m = borel_boundary_matrix(q8(), hi, lo);
    CHECK(m.rows() == hi.size());
    CHECK(m.cols() == lo.size());
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::size_t row_count = 0;
        for (std::size_t j = 0; j < lo.size(); ++j) row_count += m.get(i, j);
        const ProductChain d = product_boundary(q8(), hi.at(i), r);
        CHECK(row_count == d.size());
        for (const ProductCell& t : d) CHECK(m.get(i, *lo.index_of(t)));
    }
    CHECK_THROWS_AS(borel_boundary_matrix(q8(), lo, hi), std::invalid_argument);
}

TEST_CASE("canonicalize pushes the translate into the word")
{
    const ProductCell c = ProductCell::parse("[e22|1|4]");
    const ProductCell t = canonicalize(q8(), 4, c);
    CHECK(t.base == CellType::e22);
    CHECK(t.word == BarWord{q8().adjoint(4, 1), q8().adjoint(4, 4)});
}
