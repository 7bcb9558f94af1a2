#ifndef Q8TC_COCHAIN_HPP
#define Q8TC_COCHAIN_HPP

#include <functional>
#include <string>
#include <vector>

#include "q8tc/borel.hpp"
#include "q8tc/gf2.hpp"
#include "q8tc/group.hpp"

namespace q8tc {

// Cocycles on S^3 x_ad P^infty G, evaluated on canonical cells. Each throws
// std::invalid_argument when the cell has the wrong dimension.

/// Degree 6: [e3|{h1|h2|h3}] -> alpha(h1) alpha(h2) beta(h3), zero elsewhere.
bool eval_c(const GroupTable& group, const ProductCell& cell);
/// Degree 5: [e3|{h1|h2}] -> alpha(h1) alpha(h2), zero elsewhere.
bool eval_cprime(const GroupTable& group, const ProductCell& cell);
/// Degree 1: [e0|{h1}] -> beta(h1), zero elsewhere.
bool eval_v(const GroupTable& group, const ProductCell& cell);
/// Degree 5: indicator of the single cell [e3|{a|a}].
bool eval_cprime_indicator(const GroupTable& group, const ProductCell& cell);

/// A cochain of fixed degree given by an evaluation rule on canonical cells.
class Cochain {
public:
    using Rule = std::function<bool(const ProductCell&)>;

    Cochain(std::string name, int degree, Rule rule);

    const std::string& name() const { return name_; }
    int degree() const { return degree_; }

    /// Throws std::invalid_argument when dim(cell) != degree().
    bool operator()(const ProductCell& cell) const;

    /// Values on every cell of `basis`.
    BitVector on(const CellBasis& basis) const;

private:
    std::string name_;
    int degree_;
    Rule rule_;
};

Cochain cochain_c(const GroupTable& group);
Cochain cochain_cprime(const GroupTable& group);
Cochain cochain_v(const GroupTable& group);
Cochain cochain_cprime_indicator(const GroupTable& group);
Cochain zero_cochain(int degree);

/// Cochain with the given values on `basis`, zero on cells outside it.
Cochain from_vector(std::string name, const BitVector& values, const CellBasis& basis);

/// (v cup u)[sigma|{h1|...|hk}] = v[e0|{h1}] * u[sigma|{h2|...|hk}].
Cochain cup_with_v(const GroupTable& group, const Cochain& u);

/// Registry: c, cprime, v, cprime-indicator, v-cup-cprime.
Cochain named_cochain(const GroupTable& group, const std::string& name);
std::vector<std::string> cochain_names();

/// (delta u)[tau] = sum of u over the boundary of tau, for every tau in
/// `upper`; boundary terms outside `lower` contribute zero. Computed from
/// product_boundary directly, not from an assembled matrix.
BitVector coboundary(const GroupTable& group, const BitVector& u, const CellBasis& lower,
                     const CellBasis& upper);

/// Same, for a rule-based cochain: terms are evaluated wherever they land,
/// so no lower basis is needed.
BitVector coboundary(const GroupTable& group, const Cochain& u, const CellBasis& upper);

}  // namespace q8tc

#endif
