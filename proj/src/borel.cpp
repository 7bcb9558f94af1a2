#include "q8tc/borel.hpp"

#include <sstream>
#include <stdexcept>

namespace q8tc {

std::string ProductCell::label() const
{
    std::string s = "[" + SphereCell{0, base}.label();
    for (Element g : word) s += "|" + std::to_string(g);
    return s + "]";
}

ProductCell ProductCell::parse(const std::string& label)
{
    if (label.size() < 2 || label.front() != '[' || label.back() != ']')
        throw std::invalid_argument("malformed cell label '" + label + "'");
    std::istringstream in(label.substr(1, label.size() - 2));
    std::string part;
    ProductCell cell;
    bool first = true;
    while (std::getline(in, part, '|')) {
        if (first) {
            const SphereCell sc = SphereCell::parse(part);
            if (sc.block != 0) throw std::invalid_argument("cell label base must be a cell of S^3");
            cell.base = sc.type;
            first = false;
            continue;
        }
        std::size_t used = 0;
        int g = -1;
        try {
            g = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size() || g < 0 || g > 255)
            throw std::invalid_argument("malformed word entry in '" + label + "'");
        cell.word.push_back(static_cast<Element>(g));
    }
    if (first) throw std::invalid_argument("malformed cell label '" + label + "'");
    return cell;
}

ProductCell canonicalize(const GroupTable& group, Element g, const ProductCell& cell)
{
    return {cell.base, conjugate(group, g, cell.word)};
}

ProductChain product_boundary_at(const GroupTable& group, Element g, const ProductCell& cell,
                                 Variant variant)
{
    std::vector<ProductCell> terms;
    // S^3 part: g * d(sigma) x {omega}; each term (k tau) x {omega} ~ tau x {k^-1 omega k}.
    const EquivariantChain d = translate(group, g, equivariant_boundary(group, SphereCell{0, cell.base}));
    for (const auto& t : d) terms.push_back({t.cell.type, conjugate(group, t.translate, cell.word)});
    // Bar part: (g sigma) x d(omega).
    if (!cell.word.empty())
        for (std::size_t i = 0; i <= cell.word.size(); ++i)
            if (auto f = face(group, i, cell.word, variant)) terms.push_back({cell.base, conjugate(group, g, *f)});
    return ProductChain(std::move(terms));
}

ProductChain product_boundary(const GroupTable& group, const ProductCell& cell, Variant variant)
{
    return product_boundary_at(group, GroupTable::identity(), cell, variant);
}

CellBasis::CellBasis(const GroupTable& group, Variant variant, int dimension, int skeleton)
    : dimension_(dimension), skeleton_(skeleton), variant_(variant)
{
    if (skeleton < 0 || dimension < 0 || dimension > 3 + skeleton)
        throw std::invalid_argument("cell basis: need 0 <= dimension <= 3 + skeleton, got dimension " +
                                    std::to_string(dimension) + ", skeleton " + std::to_string(skeleton));
    std::size_t offset = 0;
    for (int td = 0; td <= 3; ++td) {
        Block b{td, offset, 0, std::nullopt};
        const int len = dimension - td;
        if (len >= 0 && len <= skeleton) {
            b.basis.emplace(group, variant, static_cast<std::size_t>(len));
            b.words = b.basis->size();
        }
        const std::size_t per_word = (td == 1 || td == 2) ? 2 : 1;
        offset += b.words * per_word;
        blocks_.push_back(std::move(b));
    }
    size_ = offset;
}

ProductCell CellBasis::at(std::size_t index) const
{
    if (index >= size_) throw std::out_of_range("cell basis index out of range");
    for (int td = 3; td >= 0; --td) {
        const Block& b = blocks_[td];
        if (b.words == 0 || index < b.offset) continue;
        const std::size_t local = index - b.offset;
        ProductCell cell;
        switch (td) {
        case 0:
            cell.base = CellType::e0;
            cell.word = b.basis->at(local);
            break;
        case 1:
            cell.base = local % 2 ? CellType::e12 : CellType::e11;
            cell.word = b.basis->at(local / 2);
            break;
        case 2:
            cell.base = local % 2 ? CellType::e22 : CellType::e21;
            cell.word = b.basis->at(local / 2);
            break;
        default:
            cell.base = CellType::e3;
            cell.word = b.basis->at(local);
            break;
        }
        return cell;
    }
    throw std::logic_error("cell basis: inconsistent block layout");
}

std::optional<std::size_t> CellBasis::index_of(const ProductCell& cell) const
{
    if (cell.dimension() != dimension_) return std::nullopt;
    const int td = type_dimension(cell.base);
    const Block& b = blocks_[td];
    if (!b.basis) return std::nullopt;
    const auto w = b.basis->index_of(cell.word);
    if (!w) return std::nullopt;
    switch (cell.base) {
    case CellType::e11:
    case CellType::e21:
        return b.offset + 2 * *w;
    case CellType::e12:
    case CellType::e22:
        return b.offset + 2 * *w + 1;
    default:
        return b.offset + *w;
    }
}

std::vector<ProductCell> CellBasis::cells() const
{
    std::vector<ProductCell> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(at(i));
    return out;
}

std::vector<ProductCell> enumerate_cells(const GroupTable& group, int dimension, int skeleton, Variant variant)
{
    return CellBasis(group, variant, dimension, skeleton).cells();
}

std::optional<std::size_t> cell_index(const ProductCell& cell, const CellBasis& basis)
{
    return basis.index_of(cell);
}

std::vector<Entry> borel_boundary_entries(const GroupTable& group, const CellBasis& upper,
                                          const CellBasis& lower)
{
    if (upper.dimension() != lower.dimension() + 1 || upper.variant() != lower.variant())
        throw std::invalid_argument("boundary matrix: bases are not in adjacent dimensions of one variant");
    std::vector<Entry> entries;
    for (std::size_t r = 0; r < upper.size(); ++r)
        for (const ProductCell& t : product_boundary(group, upper.at(r), upper.variant()))
            if (auto c = lower.index_of(t)) entries.emplace_back(r, *c);
    return entries;
}

BitMatrix borel_boundary_matrix(const GroupTable& group, const CellBasis& upper, const CellBasis& lower)
{
    const auto entries = borel_boundary_entries(group, upper, lower);
    return assemble(entries, upper.size(), lower.size());
}

}  // namespace q8tc
