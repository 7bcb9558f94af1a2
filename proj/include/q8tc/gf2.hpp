#ifndef Q8TC_GF2_HPP
#define Q8TC_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace q8tc {

using Word64 = std::uint64_t;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Raised when a computed solution fails re-verification against its system.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the matrix readers; `line()` is 1-based (0 for binary input).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value)
    {
        const Word64 mask = Word64{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= Word64{1} << (i & 63); }

    std::size_t count() const;
    std::vector<std::size_t> support() const;

    std::span<Word64> words() { return words_; }
    std::span<const Word64> words() const { return words_; }

    bool operator==(const BitVector&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<Word64> words_;
};

/// Dense row-major matrix over F2, each row packed into 64-bit words.
/// Padding bits past `cols()` are kept zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value)
    {
        Word64& w = data_[r * stride_ + (c >> 6)];
        const Word64 mask = Word64{1} << (c & 63);
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + (c >> 6)] ^= Word64{1} << (c & 63); }

    std::span<Word64> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word64> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    /// Number of nonzero entries.
    std::size_t count() const;
    /// A x over F2; `x.size()` must equal `cols()`.
    BitVector multiply(const BitVector& x) const;
    BitMatrix transpose() const;
    /// Copy with one extra column holding `b`.
    BitMatrix augmented(const BitVector& b) const;
    /// Nonzero coordinates, row-major.
    std::vector<std::pair<std::size_t, std::size_t>> entries() const;

    std::size_t bytes() const { return data_.size() * sizeof(Word64); }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word64> data_;
};

using Entry = std::pair<std::size_t, std::size_t>;

/// Builds a matrix whose bit (i, j) is the parity of the occurrences of
/// (i, j) in `entries`. Throws std::out_of_range on a bad coordinate.
BitMatrix assemble(std::span<const Entry> entries, std::size_t rows, std::size_t cols);

enum class EliminationOrder {
    /// Column sweep left to right; the first remaining row with a 1 becomes
    /// the pivot and is XORed into every later row holding a 1, including
    /// rows already retired as pivots. Produces the reduced echelon form.
    reference,
    /// Column sweep left to right, pivot chosen to limit fill-in, only
    /// remaining rows are updated. Same rank and pivot columns as `reference`.
    fast,
};

struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;  // increasing
    std::vector<std::size_t> pivot_rows;     // row of `form` holding each pivot
    BitMatrix form;
    bool reduced = false;
};

struct EliminationOptions {
    EliminationOrder order = EliminationOrder::fast;
    unsigned threads = 1;
};

Echelon echelon(BitMatrix m, const EliminationOptions& options = {});
std::size_t rank(const BitMatrix& m, const EliminationOptions& options = {});

struct SolveReport {
    std::size_t rank_coefficient = 0;
    std::size_t rank_augmented = 0;
    bool solvable = false;
    std::vector<std::size_t> solution_support;  // increasing column indices
    bool verified = false;
};

/// Decides solvability of A x = b and, when solvable, extracts the
/// particular solution supported on pivot columns (free variables zero) and
/// re-verifies it. Throws std::invalid_argument on a size mismatch and
/// ConsistencyError if the extracted solution does not reproduce b.
SolveReport solve_augmented(const BitMatrix& a, const BitVector& b,
                            const EliminationOptions& options = {});

/// True when sum of the columns in `support` equals b.
bool verify_solution(const BitMatrix& a, const BitVector& b, std::span<const std::size_t> support);

// Coordinate text format: "rows cols 2", then 1-based "i j" per nonzero,
// terminated by "0 0 0".
void write_sparse(std::ostream& out, const BitMatrix& m);
BitMatrix read_sparse(std::istream& in);

// Packed binary: 8-byte magic, rows and cols as little-endian u64, then the
// row words.
void write_packed(std::ostream& out, const BitMatrix& m);
BitMatrix read_packed(std::istream& in);

}  // namespace q8tc

#endif
