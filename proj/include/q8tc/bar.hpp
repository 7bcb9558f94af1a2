#ifndef Q8TC_BAR_HPP
#define Q8TC_BAR_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "q8tc/chain.hpp"
#include "q8tc/gf2.hpp"
#include "q8tc/group.hpp"

namespace q8tc {

enum class Variant { reduced, unreduced };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// Raised when a requested computation would exceed the configured memory budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bar word {g1|...|gt}: a t-cell of the bar construction. Unused slots
/// stay zero so the defaulted comparison is a total order.
class BarWord {
public:
    static constexpr std::size_t kCapacity = 12;

    BarWord() = default;
    BarWord(std::initializer_list<int> entries);
    explicit BarWord(std::span<const Element> entries);

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }
    Element operator[](std::size_t i) const { return entries_[i]; }
    const Element* begin() const { return entries_.data(); }
    const Element* end() const { return entries_.data() + length_; }
    std::span<const Element> view() const { return {entries_.data(), length_}; }

    void push_back(Element g);
    bool contains_identity() const;

    /// `[g1|g2|...|gt]` with numeric indices.
    std::string label() const;

    auto operator<=>(const BarWord&) const = default;

private:
    std::array<Element, kCapacity> entries_{};
    std::uint8_t length_ = 0;
};

/// Entrywise conjugation {g^-1 h1 g | ... | g^-1 ht g}.
BarWord conjugate(const GroupTable& group, Element g, const BarWord& w);

/// Words of a fixed length in canonical order: lexicographic over the
/// group's word order, first entry most significant. Positions are computed
/// arithmetically, nothing is stored per word.
class WordBasis {
public:
    WordBasis(const GroupTable& group, Variant variant, std::size_t length);

    std::size_t length() const { return length_; }
    std::size_t size() const { return size_; }
    BarWord at(std::size_t index) const;
    /// Absent when the word has the wrong length or uses a letter outside
    /// the alphabet (the identity, in the reduced variant).
    std::optional<std::size_t> index_of(const BarWord& w) const;

    std::size_t alphabet_size() const { return alphabet_.size(); }

private:
    std::vector<Element> alphabet_;
    std::array<int, 256> rank_{};
    std::size_t length_;
    std::size_t size_;
};

std::vector<BarWord> enumerate_words(const GroupTable& group, std::size_t t, Variant variant);

/// i-th face of a word. Empty optional means degenerate (a product became
/// the identity in the reduced variant). Throws std::out_of_range for i > t
/// or an empty word.
std::optional<BarWord> face(const GroupTable& group, std::size_t i, const BarWord& w, Variant variant);

/// Mod-2 sum of the non-degenerate faces.
F2Chain<BarWord> bar_boundary(const GroupTable& group, const BarWord& w, Variant variant);

/// Matrix of the boundary C_{t+1} -> C_t: one row per (t+1)-word, one
/// column per t-word, both in canonical order. Its rank equals the rank of
/// the coboundary C^t -> C^{t+1}.
BitMatrix bar_boundary_matrix(const GroupTable& group, Variant variant, std::size_t t);

/// dim H^k(G; F2) for k = 0..k_max from the bar cochain complex.
std::vector<std::size_t> group_cohomology_dims(const GroupTable& group, std::size_t k_max,
                                               Variant variant,
                                               std::size_t memory_budget = std::size_t{1} << 30);

}  // namespace q8tc

#endif
