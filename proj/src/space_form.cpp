#include "q8tc/space_form.hpp"

#include <stdexcept>

#include "q8tc/gf2.hpp"

namespace q8tc {

namespace {

constexpr const char* kSuffix[] = {"", "1", "2", "1", "2", ""};
constexpr const char* kSubscript[] = {"", "_1", "_2", "_1", "_2", ""};

}  // namespace

std::string SphereCell::label() const
{
    const int t = static_cast<int>(type);
    // block 0 keeps the compact names used in product cell labels
    if (block == 0) return "e" + std::to_string(dimension()) + kSuffix[t];
    return "e^" + std::to_string(dimension()) + kSubscript[t];
}

SphereCell SphereCell::parse(const std::string& label)
{
    for (int block = 0; block < 64; ++block)
        for (CellType t : kCellTypes) {
            SphereCell c{static_cast<std::uint8_t>(block), t};
            if (c.label() == label) return c;
        }
    throw std::invalid_argument("unknown sphere cell '" + label + "'");
}

EquivariantChain equivariant_boundary(const GroupTable& group, SphereCell cell)
{
    const Element e = GroupTable::identity();
    const Element a = group.gen_a();
    const Element b = group.gen_b();
    const Element ab = group.gen_ab();
    const std::uint8_t k = cell.block;
    auto term = [k](Element g, CellType t) { return EquivariantTerm{g, SphereCell{k, t}}; };

    switch (cell.type) {
    case CellType::e0: {
        if (k == 0) return {};
        std::vector<EquivariantTerm> terms;
        for (int g = 0; g < group.order(); ++g)
            terms.push_back({static_cast<Element>(g), SphereCell{static_cast<std::uint8_t>(k - 1), CellType::e3}});
        return EquivariantChain(std::move(terms));
    }
    case CellType::e11:
        return {term(a, CellType::e0), term(e, CellType::e0)};
    case CellType::e12:
        return {term(b, CellType::e0), term(e, CellType::e0)};
    case CellType::e21:
        return {term(a, CellType::e11), term(e, CellType::e11), term(b, CellType::e12), term(e, CellType::e12)};
    case CellType::e22:
        return {term(ab, CellType::e11), term(e, CellType::e11), term(a, CellType::e12), term(e, CellType::e12)};
    case CellType::e3:
        return {term(a, CellType::e21), term(e, CellType::e21), term(ab, CellType::e22), term(e, CellType::e22)};
    }
    return {};
}

EquivariantChain translate(const GroupTable& group, Element g, const EquivariantChain& chain)
{
    std::vector<EquivariantTerm> terms;
    for (const auto& t : chain) terms.push_back({group.mul(g, t.translate), t.cell});
    return EquivariantChain(std::move(terms));
}

EquivariantChain equivariant_boundary(const GroupTable& group, const EquivariantChain& chain)
{
    EquivariantChain out;
    for (const auto& t : chain) out += translate(group, t.translate, equivariant_boundary(group, t.cell));
    return out;
}

F2Chain<SphereCell> to_quotient(const EquivariantChain& chain)
{
    std::vector<SphereCell> cells;
    for (const auto& t : chain) cells.push_back(t.cell);
    return F2Chain<SphereCell>(std::move(cells));
}

F2Chain<SphereCell> quotient_boundary(const GroupTable& group, SphereCell cell)
{
    return to_quotient(equivariant_boundary(group, cell));
}

std::vector<SphereCell> sphere_cells(std::size_t t)
{
    std::vector<SphereCell> out;
    for (std::size_t k = 0; k <= t; ++k)
        for (CellType type : kCellTypes) out.push_back({static_cast<std::uint8_t>(k), type});
    return out;
}

std::vector<std::size_t> space_form_cohomology_dims(const GroupTable& group, std::size_t t)
{
    const auto cells = sphere_cells(t);
    const std::size_t top = 4 * t + 3;
    std::vector<std::vector<SphereCell>> by_dim(top + 1);
    for (const auto& c : cells) by_dim[static_cast<std::size_t>(c.dimension())].push_back(c);

    // rank of d: C_{k+1} -> C_k, equal to rank of the coboundary C^k -> C^{k+1}.
    std::vector<std::size_t> rank_delta(top + 1, 0);
    for (std::size_t k = 0; k < top; ++k) {
        const auto& upper = by_dim[k + 1];
        const auto& lower = by_dim[k];
        BitMatrix m(upper.size(), lower.size());
        for (std::size_t r = 0; r < upper.size(); ++r)
            for (const auto& f : quotient_boundary(group, upper[r]))
                for (std::size_t c = 0; c < lower.size(); ++c)
                    if (lower[c] == f) m.flip(r, c);
        rank_delta[k] = rank(m);
    }
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= top; ++k)
        dims.push_back(by_dim[k].size() - rank_delta[k] - (k ? rank_delta[k - 1] : 0));
    return dims;
}

long euler_characteristic(const GroupTable& group, std::size_t t)
{
    long chi = 0;
    const auto dims = space_form_cohomology_dims(group, t);
    for (std::size_t k = 0; k < dims.size(); ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(dims[k]);
    return chi;
}

}  // namespace q8tc
