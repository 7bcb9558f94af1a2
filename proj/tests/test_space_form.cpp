#include <doctest.h>

#include "q8tc/space_form.hpp"

using namespace q8tc;

namespace {

const GroupTable& q8()
{
    static const GroupTable q = GroupTable::quaternion();
    return q;
}

SphereCell cell(int block, CellType t) { return {static_cast<std::uint8_t>(block), t}; }

}  // namespace

TEST_CASE("equivariant boundary examples")
{
    CHECK(equivariant_boundary(q8(), cell(0, CellType::e0)).empty());

    const EquivariantChain d11 = equivariant_boundary(q8(), cell(0, CellType::e11));
    CHECK(d11 == EquivariantChain{{1, cell(0, CellType::e0)}, {0, cell(0, CellType::e0)}});

    const EquivariantChain d4 = equivariant_boundary(q8(), cell(1, CellType::e0));
    CHECK(d4.size() == 8);
    for (int g = 0; g < 8; ++g) CHECK(d4.contains({static_cast<Element>(g), cell(0, CellType::e3)}));

    const EquivariantChain d3 = equivariant_boundary(q8(), cell(0, CellType::e3));
    CHECK(d3 == EquivariantChain{{1, cell(0, CellType::e21)},
                                 {0, cell(0, CellType::e21)},
                                 {5, cell(0, CellType::e22)},
                                 {0, cell(0, CellType::e22)}});
}

TEST_CASE("boundary squared vanishes through dimension 7")
{
    for (const SphereCell& c : sphere_cells(1)) {
        CAPTURE(c.label());
        CHECK(equivariant_boundary(q8(), equivariant_boundary(q8(), c)).empty());
    }
}

TEST_CASE("quotient boundaries vanish mod 2")
{
    for (const SphereCell& c : sphere_cells(2)) {
        CAPTURE(c.label());
        CHECK(quotient_boundary(q8(), c).empty());
        CHECK(quotient_boundary(q8(), c) == to_quotient(equivariant_boundary(q8(), c)));
    }
}

TEST_CASE("translation is a left action")
{
    const EquivariantChain d = equivariant_boundary(q8(), cell(0, CellType::e22));
    for (int g = 0; g < 8; ++g)
        for (int h = 0; h < 8; ++h) {
            const auto gh = q8().mul(static_cast<Element>(g), static_cast<Element>(h));
            CHECK(translate(q8(), g, translate(q8(), h, d)) == translate(q8(), gh, d));
        }
}

TEST_CASE("cohomology of the space form")
{
    CHECK(space_form_cohomology_dims(q8(), 0) == std::vector<std::size_t>{1, 2, 2, 1});
    const auto dims1 = space_form_cohomology_dims(q8(), 1);
    CHECK(dims1.size() == 8);
    CHECK(dims1.front() == 1);
    CHECK(euler_characteristic(q8(), 0) == 0);
    CHECK(euler_characteristic(q8(), 1) == 0);
}

TEST_CASE("labels")
{
    CHECK(cell(0, CellType::e0).label() == "e0");
    CHECK(cell(0, CellType::e12).label() == "e12");
    CHECK(cell(0, CellType::e3).label() == "e3");
    CHECK(cell(1, CellType::e0).label() == "e^4");
    CHECK(cell(1, CellType::e21).label() == "e^6_1");
    CHECK(cell(2, CellType::e3).label() == "e^11");
    for (const SphereCell& c : sphere_cells(2)) CHECK(SphereCell::parse(c.label()) == c);
    CHECK_THROWS_AS(SphereCell::parse("e13"), std::invalid_argument);
    CHECK(sphere_cells(0).size() == 6);
}
