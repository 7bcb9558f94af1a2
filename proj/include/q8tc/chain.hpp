#ifndef Q8TC_CHAIN_HPP
#define Q8TC_CHAIN_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace q8tc {

/// A formal sum over F2 of cells of type T, kept as a sorted list with no
/// repeats. Adding is symmetric difference.
template <class T>
class F2Chain {
public:
    F2Chain() = default;
    F2Chain(std::initializer_list<T> terms) : F2Chain(std::vector<T>(terms)) {}

    /// Collects `terms` with multiplicity and cancels pairs.
    explicit F2Chain(std::vector<T> terms) : terms_(std::move(terms)) { normalize(); }

    F2Chain& operator+=(const F2Chain& other)
    {
        std::vector<T> out;
        out.reserve(terms_.size() + other.terms_.size());
        std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                      other.terms_.end(), std::back_inserter(out));
        terms_ = std::move(out);
        return *this;
    }
    friend F2Chain operator+(F2Chain lhs, const F2Chain& rhs) { return lhs += rhs; }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const T& t) const { return std::binary_search(terms_.begin(), terms_.end(), t); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const std::vector<T>& terms() const { return terms_; }

    bool operator==(const F2Chain&) const = default;

private:
    void normalize()
    {
        std::sort(terms_.begin(), terms_.end());
        std::vector<T> out;
        out.reserve(terms_.size());
        for (std::size_t i = 0; i < terms_.size();) {
            std::size_t j = i;
            while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
            if ((j - i) % 2 == 1) out.push_back(terms_[i]);
            i = j;
        }
        terms_ = std::move(out);
    }

    std::vector<T> terms_;
};

/// Chain in a fixed canonical basis, given by positions.
using ChainF2 = F2Chain<std::size_t>;

}  // namespace q8tc

#endif
