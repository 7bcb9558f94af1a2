#include "q8tc/cochain.hpp"

#include <memory>
#include <stdexcept>

namespace q8tc {

namespace {

void require_degree(const ProductCell& cell, int degree, const char* name)
{
    if (cell.dimension() != degree)
        throw std::invalid_argument(std::string(name) + " has degree " + std::to_string(degree) +
                                    ", cell " + cell.label() + " has dimension " +
                                    std::to_string(cell.dimension()));
}

}  // namespace

bool eval_c(const GroupTable& group, const ProductCell& cell)
{
    require_degree(cell, 6, "c");
    const BarWord& w = cell.word;
    return cell.base == CellType::e3 && group.alpha(w[0]) && group.alpha(w[1]) && group.beta(w[2]);
}

bool eval_cprime(const GroupTable& group, const ProductCell& cell)
{
    require_degree(cell, 5, "cprime");
    const BarWord& w = cell.word;
    return cell.base == CellType::e3 && group.alpha(w[0]) && group.alpha(w[1]);
}

bool eval_v(const GroupTable& group, const ProductCell& cell)
{
    require_degree(cell, 1, "v");
    return cell.base == CellType::e0 && group.beta(cell.word[0]);
}

bool eval_cprime_indicator(const GroupTable& group, const ProductCell& cell)
{
    require_degree(cell, 5, "cprime-indicator");
    const Element a = group.gen_a();
    return cell.base == CellType::e3 && cell.word[0] == a && cell.word[1] == a;
}

Cochain::Cochain(std::string name, int degree, Rule rule)
    : name_(std::move(name)), degree_(degree), rule_(std::move(rule))
{
    if (degree < 0) throw std::invalid_argument("cochain degree must be non-negative");
}

bool Cochain::operator()(const ProductCell& cell) const
{
    require_degree(cell, degree_, name_.c_str());
    return rule_(cell);
}

BitVector Cochain::on(const CellBasis& basis) const
{
    if (basis.dimension() != degree_)
        throw std::invalid_argument("cochain " + name_ + " evaluated on a basis of dimension " +
                                    std::to_string(basis.dimension()));
    BitVector values(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (rule_(basis.at(i))) values.set(i, true);
    return values;
}

Cochain cochain_c(const GroupTable& group)
{
    return {"c", 6, [group](const ProductCell& cell) { return eval_c(group, cell); }};
}

Cochain cochain_cprime(const GroupTable& group)
{
    return {"cprime", 5, [group](const ProductCell& cell) { return eval_cprime(group, cell); }};
}

Cochain cochain_v(const GroupTable& group)
{
    return {"v", 1, [group](const ProductCell& cell) { return eval_v(group, cell); }};
}

Cochain cochain_cprime_indicator(const GroupTable& group)
{
    return {"cprime-indicator", 5,
            [group](const ProductCell& cell) { return eval_cprime_indicator(group, cell); }};
}

Cochain zero_cochain(int degree)
{
    return {"zero", degree, [](const ProductCell&) { return false; }};
}

Cochain from_vector(std::string name, const BitVector& values, const CellBasis& basis)
{
    if (values.size() != basis.size()) throw std::invalid_argument("cochain vector does not match basis");
    auto shared = std::make_shared<const std::pair<BitVector, CellBasis>>(values, basis);
    return {std::move(name), basis.dimension(), [shared](const ProductCell& cell) {
                const auto idx = shared->second.index_of(cell);
                return idx && shared->first.get(*idx);
            }};
}

Cochain cup_with_v(const GroupTable& group, const Cochain& u)
{
    return {"v-cup-" + u.name(), u.degree() + 1, [group, u](const ProductCell& cell) {
                if (cell.word.empty() || !group.beta(cell.word[0])) return false;
                const ProductCell rest{cell.base, BarWord(cell.word.view().subspan(1))};
                return u(rest);
            }};
}

Cochain named_cochain(const GroupTable& group, const std::string& name)
{
    if (name == "c") return cochain_c(group);
    if (name == "cprime") return cochain_cprime(group);
    if (name == "v") return cochain_v(group);
    if (name == "cprime-indicator") return cochain_cprime_indicator(group);
    if (name == "v-cup-cprime") return cup_with_v(group, cochain_cprime(group));
    throw std::invalid_argument("unknown cochain '" + name + "'");
}

std::vector<std::string> cochain_names()
{
    return {"c", "cprime", "v", "cprime-indicator", "v-cup-cprime"};
}

BitVector coboundary(const GroupTable& group, const BitVector& u, const CellBasis& lower,
                     const CellBasis& upper)
{
    if (u.size() != lower.size())
        throw std::invalid_argument("coboundary: cochain has " + std::to_string(u.size()) +
                                    " entries, basis has " + std::to_string(lower.size()));
    if (upper.dimension() != lower.dimension() + 1 || upper.variant() != lower.variant())
        throw std::invalid_argument("coboundary: bases are not in adjacent dimensions of one variant");
    BitVector out(upper.size());
    for (std::size_t r = 0; r < upper.size(); ++r) {
        bool sum = false;
        for (const ProductCell& t : product_boundary(group, upper.at(r), upper.variant()))
            if (auto idx = lower.index_of(t)) sum ^= u.get(*idx);
        if (sum) out.set(r, true);
    }
    return out;
}

BitVector coboundary(const GroupTable& group, const Cochain& u, const CellBasis& upper)
{
    if (upper.dimension() != u.degree() + 1)
        throw std::invalid_argument("coboundary: basis dimension does not match cochain degree");
    BitVector out(upper.size());
    for (std::size_t r = 0; r < upper.size(); ++r) {
        bool sum = false;
        for (const ProductCell& t : product_boundary(group, upper.at(r), upper.variant())) sum ^= u(t);
        if (sum) out.set(r, true);
    }
    return out;
}

}  // namespace q8tc
