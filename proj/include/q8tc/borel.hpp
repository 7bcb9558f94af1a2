#ifndef Q8TC_BOREL_HPP
#define Q8TC_BOREL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "q8tc/bar.hpp"
#include "q8tc/chain.hpp"
#include "q8tc/gf2.hpp"
#include "q8tc/group.hpp"
#include "q8tc/space_form.hpp"

namespace q8tc {

/// A cell [sigma|{omega}] of S^3 x_ad P^t G, stored as the orbit
/// representative whose S^3 cell carries the identity translate.
struct ProductCell {
    CellType base = CellType::e0;
    BarWord word;

    int dimension() const { return type_dimension(base) + static_cast<int>(word.size()); }
    /// `[e0|7|7|7|6]`; an empty word renders as `[e11]`.
    std::string label() const;
    static ProductCell parse(const std::string& label);

    auto operator<=>(const ProductCell&) const = default;
};

using ProductChain = F2Chain<ProductCell>;

/// Mod-2 boundary of a product cell. The S^3 part follows the G-cell
/// boundary, each translate k pushed into the word as conjugation by k; the
/// bar part applies the bar boundary to the word.
ProductChain product_boundary(const GroupTable& group, const ProductCell& cell, Variant variant);

/// Boundary of the non-canonical representative (g sigma) x {omega},
/// returned in canonical form. For g = e this is product_boundary.
ProductChain product_boundary_at(const GroupTable& group, Element g, const ProductCell& cell,
                                 Variant variant);

/// Canonical form of (g sigma) x {omega}: sigma x {g^-1 omega g}.
ProductCell canonicalize(const GroupTable& group, Element g, const ProductCell& cell);

/// Product cells of one dimension with word length at most `skeleton`, in
/// canonical order: the e0 block, then e11/e12 interleaved per word, then
/// e21/e22 interleaved per word, then e3, each block in canonical word order.
/// Cells are computed from their position on demand.
class CellBasis {
public:
    CellBasis(const GroupTable& group, Variant variant, int dimension, int skeleton);

    int dimension() const { return dimension_; }
    int skeleton() const { return skeleton_; }
    Variant variant() const { return variant_; }
    std::size_t size() const { return size_; }

    ProductCell at(std::size_t index) const;
    /// Absent when the cell lies outside this basis (wrong dimension, word
    /// beyond the skeleton, or a degenerate word in the reduced variant).
    std::optional<std::size_t> index_of(const ProductCell& cell) const;

    std::vector<ProductCell> cells() const;

private:
    struct Block {
        int type_dim;
        std::size_t offset;
        std::size_t words;
        std::optional<WordBasis> basis;
    };

    int dimension_;
    int skeleton_;
    Variant variant_;
    std::vector<Block> blocks_;  // indexed by type dimension 0..3
    std::size_t size_ = 0;
};

std::vector<ProductCell> enumerate_cells(const GroupTable& group, int dimension, int skeleton,
                                         Variant variant);

std::optional<std::size_t> cell_index(const ProductCell& cell, const CellBasis& basis);

/// Boundary restricted to the chosen bases: one row per cell of `upper`,
/// one column per cell of `lower`. Terms outside `lower` are dropped.
BitMatrix borel_boundary_matrix(const GroupTable& group, const CellBasis& upper, const CellBasis& lower);

/// Same matrix as coordinate list (row, column), each coordinate once.
std::vector<Entry> borel_boundary_entries(const GroupTable& group, const CellBasis& upper,
                                          const CellBasis& lower);

}  // namespace q8tc

#endif
