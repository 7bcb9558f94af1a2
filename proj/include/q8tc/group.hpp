#ifndef Q8TC_GROUP_HPP
#define Q8TC_GROUP_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace q8tc {

/// Index of a group element in a Cayley table. The identity is always 0.
using Element = std::uint8_t;

/// A finite group given by its Cayley table, together with two F2-valued
/// exponent cochains alpha, beta and the designated generators a, b used by
/// the cell structure of S^3.
///
/// Immutable once constructed; all lookups are range-checked and throw
/// std::out_of_range on a bad index.
class GroupTable {
public:
    struct Spec {
        std::vector<std::vector<int>> mul;
        std::vector<int> inv;  // optional, derived when empty
        std::vector<int> alpha;
        std::vector<int> beta;
        std::vector<std::string> names;  // optional
        std::vector<int> generators;     // {a, b}
        std::vector<int> word_order;     // optional, non-identity elements
    };

    explicit GroupTable(Spec spec);

    /// Q8 = <a, b | a^4 = b^4 = abab^-1 = 1> with a^m b^n stored at index m + 4n.
    static GroupTable quaternion();

    static GroupTable from_json(const nlohmann::json& doc);
    static GroupTable load(const std::filesystem::path& path);
    nlohmann::json to_json() const;

    int order() const { return order_; }
    static constexpr Element identity() { return 0; }

    Element mul(Element g, Element h) const;
    Element inverse(Element g) const;
    /// Conjugate of h by g, i.e. g^-1 h g.
    Element adjoint(Element g, Element h) const;

    bool alpha(Element g) const;
    bool beta(Element g) const;

    Element gen_a() const { return gen_a_; }
    Element gen_b() const { return gen_b_; }
    Element gen_ab() const { return mul(gen_a_, gen_b_); }

    const std::string& name(Element g) const;

    /// Order in which bar words are generated: the non-identity elements for
    /// the reduced complex (identity appended for the unreduced one).
    const std::vector<Element>& word_order() const { return word_order_; }

private:
    void check(Element g) const;
    void validate() const;

    int order_ = 0;
    std::vector<Element> mul_;
    std::vector<Element> inv_;
    std::vector<std::uint8_t> alpha_;
    std::vector<std::uint8_t> beta_;
    std::vector<std::string> names_;
    std::vector<Element> word_order_;
    Element gen_a_ = 0;
    Element gen_b_ = 0;
};

}  // namespace q8tc

#endif
