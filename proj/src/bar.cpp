#include "q8tc/bar.hpp"

#include "q8tc/gf2.hpp"

namespace q8tc {

std::string to_string(Variant v) { return v == Variant::reduced ? "reduced" : "unreduced"; }

Variant parse_variant(const std::string& s)
{
    if (s == "reduced") return Variant::reduced;
    if (s == "unreduced") return Variant::unreduced;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

BarWord::BarWord(std::initializer_list<int> entries)
{
    for (int g : entries) {
        if (g < 0 || g > 255) throw std::out_of_range("bar word entry out of range");
        push_back(static_cast<Element>(g));
    }
}

BarWord::BarWord(std::span<const Element> entries)
{
    for (Element g : entries) push_back(g);
}

void BarWord::push_back(Element g)
{
    if (length_ == kCapacity) throw std::length_error("bar word longer than capacity");
    entries_[length_++] = g;
}

bool BarWord::contains_identity() const
{
    for (Element g : *this)
        if (g == GroupTable::identity()) return true;
    return false;
}

std::string BarWord::label() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < length_; ++i) {
        if (i) s += '|';
        s += std::to_string(entries_[i]);
    }
    return s + "]";
}

BarWord conjugate(const GroupTable& group, Element g, const BarWord& w)
{
    BarWord out;
    for (Element h : w) out.push_back(group.adjoint(g, h));
    return out;
}

WordBasis::WordBasis(const GroupTable& group, Variant variant, std::size_t length)
    : alphabet_(group.word_order()), length_(length)
{
    if (variant == Variant::unreduced) alphabet_.push_back(GroupTable::identity());
    rank_.fill(-1);
    for (std::size_t k = 0; k < alphabet_.size(); ++k) rank_[alphabet_[k]] = static_cast<int>(k);
    if (length > BarWord::kCapacity) throw std::length_error("word basis length exceeds capacity");
    size_ = 1;
    for (std::size_t i = 0; i < length; ++i) size_ *= alphabet_.size();
}

BarWord WordBasis::at(std::size_t index) const
{
    if (index >= size_) throw std::out_of_range("word basis index out of range");
    std::array<Element, BarWord::kCapacity> digits{};
    const std::size_t n = alphabet_.size();
    for (std::size_t i = length_; i-- > 0;) {
        digits[i] = alphabet_[index % n];
        index /= n;
    }
    return BarWord(std::span<const Element>(digits.data(), length_));
}

std::optional<std::size_t> WordBasis::index_of(const BarWord& w) const
{
    if (w.size() != length_) return std::nullopt;
    std::size_t index = 0;
    for (Element g : w) {
        const int r = rank_[g];
        if (r < 0) return std::nullopt;
        index = index * alphabet_.size() + static_cast<std::size_t>(r);
    }
    return index;
}

std::vector<BarWord> enumerate_words(const GroupTable& group, std::size_t t, Variant variant)
{
    WordBasis basis(group, variant, t);
    std::vector<BarWord> out;
    out.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) out.push_back(basis.at(i));
    return out;
}

std::optional<BarWord> face(const GroupTable& group, std::size_t i, const BarWord& w, Variant variant)
{
    const std::size_t t = w.size();
    if (t == 0 || i > t)
        throw std::out_of_range("face index " + std::to_string(i) + " invalid for a word of length " +
                                std::to_string(t));
    BarWord out;
    if (i == 0) {
        for (std::size_t k = 1; k < t; ++k) out.push_back(w[k]);
    } else if (i == t) {
        for (std::size_t k = 0; k + 1 < t; ++k) out.push_back(w[k]);
    } else {
        for (std::size_t k = 0; k + 1 < i; ++k) out.push_back(w[k]);
        const Element product = group.mul(w[i - 1], w[i]);
        if (variant == Variant::reduced && product == GroupTable::identity()) return std::nullopt;
        out.push_back(product);
        for (std::size_t k = i + 1; k < t; ++k) out.push_back(w[k]);
    }
    return out;
}

F2Chain<BarWord> bar_boundary(const GroupTable& group, const BarWord& w, Variant variant)
{
    std::vector<BarWord> terms;
    terms.reserve(w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i)
        if (auto f = face(group, i, w, variant)) terms.push_back(*f);
    return F2Chain<BarWord>(std::move(terms));
}

BitMatrix bar_boundary_matrix(const GroupTable& group, Variant variant, std::size_t t)
{
    const WordBasis upper(group, variant, t + 1);
    const WordBasis lower(group, variant, t);
    BitMatrix m(upper.size(), lower.size());
    for (std::size_t r = 0; r < upper.size(); ++r)
        for (const BarWord& f : bar_boundary(group, upper.at(r), variant))
            if (auto c = lower.index_of(f)) m.flip(r, *c);
    return m;
}

std::vector<std::size_t> group_cohomology_dims(const GroupTable& group, std::size_t k_max,
                                               Variant variant, std::size_t memory_budget)
{
    // rank_delta[k] = rank of the coboundary C^k -> C^{k+1}.
    std::vector<std::size_t> rank_delta(k_max + 1, 0);
    for (std::size_t k = 0; k <= k_max; ++k) {
        const std::size_t rows = WordBasis(group, variant, k + 1).size();
        const std::size_t cols = WordBasis(group, variant, k).size();
        const std::size_t bytes = rows * words_for(cols) * sizeof(Word64);
        if (bytes > memory_budget)
            throw ResourceError("coboundary matrix in degree " + std::to_string(k) + " needs " +
                                std::to_string(bytes) + " bytes, budget is " +
                                std::to_string(memory_budget));
        rank_delta[k] = rank(bar_boundary_matrix(group, variant, k));
    }
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= k_max; ++k) {
        const std::size_t cochains = WordBasis(group, variant, k).size();
        dims.push_back(cochains - rank_delta[k] - (k ? rank_delta[k - 1] : 0));
    }
    return dims;
}

}  // namespace q8tc
