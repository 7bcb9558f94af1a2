#ifndef Q8TC_SPACE_FORM_HPP
#define Q8TC_SPACE_FORM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "q8tc/chain.hpp"
#include "q8tc/group.hpp"

namespace q8tc {

/// The six cell types of one 4-block of the G-cell structure of S^{4t+3}.
enum class CellType : std::uint8_t { e0, e11, e12, e21, e22, e3 };

inline constexpr int type_dimension(CellType t)
{
    constexpr int dims[] = {0, 1, 1, 2, 2, 3};
    return dims[static_cast<int>(t)];
}

inline constexpr CellType kCellTypes[] = {CellType::e0,  CellType::e11, CellType::e12,
                                          CellType::e21, CellType::e22, CellType::e3};

/// Orbit-representative cell e^{4k+i}_j of S^{4t+3}; `block` is k.
struct SphereCell {
    std::uint8_t block = 0;
    CellType type = CellType::e0;

    int dimension() const { return 4 * block + type_dimension(type); }
    /// e0, e11, ..., e3 for block 0; e^4, e^5_1, ..., e^7 for block 1, and so on.
    std::string label() const;
    static SphereCell parse(const std::string& label);

    auto operator<=>(const SphereCell&) const = default;
};

/// Translate g * cell in the G-cell complex.
struct EquivariantTerm {
    Element translate = 0;
    SphereCell cell;
    auto operator<=>(const EquivariantTerm&) const = default;
};

/// F2[G]-linear combination of G-cells.
using EquivariantChain = F2Chain<EquivariantTerm>;

/// Mod-2 reduction of the cellular boundary of an orbit representative.
EquivariantChain equivariant_boundary(const GroupTable& group, SphereCell cell);

/// Left multiplication by g.
EquivariantChain translate(const GroupTable& group, Element g, const EquivariantChain& chain);

/// Boundary extended F2[G]-linearly: d(g s) = g d(s).
EquivariantChain equivariant_boundary(const GroupTable& group, const EquivariantChain& chain);

/// Image under g -> 1 (quotient by the free G-action), coefficients mod 2.
F2Chain<SphereCell> to_quotient(const EquivariantChain& chain);

/// Boundary in the cellular chain complex of N^t(2) = S^{4t+3}/G over F2.
F2Chain<SphereCell> quotient_boundary(const GroupTable& group, SphereCell cell);

/// All orbit-representative cells of S^{4t+3}, ordered by dimension.
std::vector<SphereCell> sphere_cells(std::size_t t);

/// dim H^k(N^t(2); F2) for k = 0..4t+3.
std::vector<std::size_t> space_form_cohomology_dims(const GroupTable& group, std::size_t t);

/// Alternating sum of the cohomology dimensions of N^t(2).
long euler_characteristic(const GroupTable& group, std::size_t t);

}  // namespace q8tc

#endif
