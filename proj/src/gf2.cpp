#include "q8tc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace q8tc {

std::size_t BitVector::count() const
{
    std::size_t n = 0;
    for (Word64 w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> BitVector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        Word64 w = words_[k];
        while (w) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t BitMatrix::count() const
{
    std::size_t n = 0;
    for (Word64 w : data_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitVector BitMatrix::multiply(const BitVector& x) const
{
    if (x.size() != cols_) throw std::invalid_argument("multiply: vector length mismatch");
    BitVector y(rows_);
    const auto xw = x.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto rw = row(r);
        Word64 acc = 0;
        for (std::size_t k = 0; k < stride_; ++k) acc ^= rw[k] & xw[k];
        if (std::popcount(acc) & 1) y.set(r, true);
    }
    return y;
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto rw = row(r);
        for (std::size_t k = 0; k < stride_; ++k) {
            Word64 w = rw[k];
            while (w) {
                t.set(k * 64 + static_cast<std::size_t>(std::countr_zero(w)), r, true);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::augmented(const BitVector& b) const
{
    if (b.size() != rows_) throw std::invalid_argument("augmented: right-hand side length mismatch");
    BitMatrix out(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy_n(row(r).begin(), stride_, out.row(r).begin());
        if (b.get(r)) out.set(r, cols_, true);
    }
    return out;
}

std::vector<Entry> BitMatrix::entries() const
{
    std::vector<Entry> out;
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto rw = row(r);
        for (std::size_t k = 0; k < stride_; ++k) {
            Word64 w = rw[k];
            while (w) {
                out.emplace_back(r, k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }
    return out;
}

BitMatrix assemble(std::span<const Entry> entries, std::size_t rows, std::size_t cols)
{
    BitMatrix m(rows, cols);
    for (const auto& [i, j] : entries) {
        if (i >= rows || j >= cols)
            throw std::out_of_range("assemble: entry (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside " + std::to_string(rows) +
                                    "x" + std::to_string(cols));
        m.flip(i, j);
    }
    return m;
}

namespace {

inline bool bit(std::span<const Word64> row, std::size_t c) { return (row[c >> 6] >> (c & 63)) & 1u; }

inline void xor_range(Word64* dst, const Word64* src, std::size_t from, std::size_t to)
{
    for (std::size_t k = from; k < to; ++k) dst[k] ^= src[k];
}

std::size_t last_word(std::span<const Word64> row)
{
    std::size_t n = row.size();
    while (n > 0 && row[n - 1] == 0) --n;
    return n;
}

/// Applies `pivot` to every row in `targets` over words [from, to). Rows are
/// disjoint, so splitting the target list across threads is bit-identical
/// to the sequential loop.
void xor_into(BitMatrix& m, std::size_t pivot, std::span<const std::size_t> targets,
              std::size_t from, std::size_t to, unsigned threads)
{
    const Word64* src = m.row(pivot).data();
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t t = lo; t < hi; ++t) xor_range(m.row(targets[t]).data(), src, from, to);
    };
    const std::size_t volume = targets.size() * (to - from);
    if (threads <= 1 || volume < (std::size_t{1} << 16)) {
        work(0, targets.size());
        return;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (targets.size() + threads - 1) / threads;
    for (std::size_t lo = 0; lo < targets.size(); lo += chunk)
        pool.emplace_back(work, lo, std::min(targets.size(), lo + chunk));
}

Echelon eliminate_reference(BitMatrix m, unsigned threads)
{
    Echelon out;
    out.reduced = true;
    std::vector<std::size_t> active(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) active[r] = r;
    std::vector<std::size_t> targets;

    for (std::size_t j = 0; j < m.cols() && !active.empty(); ++j) {
        const std::size_t w = j >> 6;
        auto first = std::find_if(active.begin(), active.end(),
                                  [&](std::size_t r) { return bit(m.row(r), j); });
        if (first == active.end()) continue;
        const std::size_t pivot = *first;
        targets.clear();
        for (auto it = std::next(first); it != active.end(); ++it)
            if (bit(m.row(*it), j)) targets.push_back(*it);
        for (std::size_t r : out.pivot_rows)
            if (bit(m.row(r), j)) targets.push_back(r);
        xor_into(m, pivot, targets, w, m.stride(), threads);
        active.erase(first);
        out.pivot_rows.push_back(pivot);
        out.pivot_columns.push_back(j);
    }
    out.rank = out.pivot_rows.size();
    out.form = std::move(m);
    return out;
}

Echelon eliminate_fast(BitMatrix m, unsigned threads)
{
    Echelon out;
    out.reduced = false;
    const std::size_t stride = m.stride();
    std::vector<std::size_t> last(m.rows());
    std::vector<std::size_t> active;
    active.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        last[r] = last_word(m.row(r));
        if (last[r] > 0) active.push_back(r);
    }

    std::vector<std::size_t> candidates;
    std::vector<std::size_t> targets;
    for (std::size_t w = 0; w < stride && !active.empty(); ++w) {
        candidates.clear();
        for (std::size_t r : active)
            if (m.row(r)[w] != 0) candidates.push_back(r);
        if (candidates.empty()) continue;

        const std::size_t col_end = std::min<std::size_t>(64, m.cols() - w * 64);
        for (std::size_t b = 0; b < col_end && !candidates.empty(); ++b) {
            const Word64 mask = Word64{1} << b;
            std::size_t best = candidates.size();
            for (std::size_t k = 0; k < candidates.size(); ++k) {
                const std::size_t r = candidates[k];
                if (!(m.row(r)[w] & mask)) continue;
                if (best == candidates.size() || last[r] < last[candidates[best]]) best = k;
            }
            if (best == candidates.size()) continue;
            const std::size_t pivot = candidates[best];
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));

            targets.clear();
            for (std::size_t r : candidates)
                if (m.row(r)[w] & mask) targets.push_back(r);
            xor_into(m, pivot, targets, w, last[pivot], threads);
            for (std::size_t r : targets) last[r] = std::max(last[r], last[pivot]);

            out.pivot_rows.push_back(pivot);
            out.pivot_columns.push_back(w * 64 + b);
            last[pivot] = std::numeric_limits<std::size_t>::max();  // retired marker
        }
        // Drop retired rows and rows that became zero in every remaining word.
        std::erase_if(active, [&](std::size_t r) {
            if (last[r] == std::numeric_limits<std::size_t>::max()) return true;
            return last[r] <= w + 1 && m.row(r)[w] == 0;
        });
    }
    out.rank = out.pivot_rows.size();
    out.form = std::move(m);
    return out;
}

}  // namespace

Echelon echelon(BitMatrix m, const EliminationOptions& options)
{
    const unsigned threads = std::max(1u, options.threads);
    return options.order == EliminationOrder::reference ? eliminate_reference(std::move(m), threads)
                                                         : eliminate_fast(std::move(m), threads);
}

std::size_t rank(const BitMatrix& m, const EliminationOptions& options)
{
    return echelon(m, options).rank;
}

bool verify_solution(const BitMatrix& a, const BitVector& b, std::span<const std::size_t> support)
{
    if (b.size() != a.rows()) return false;
    BitVector x(a.cols());
    for (std::size_t c : support) {
        if (c >= a.cols()) return false;
        x.flip(c);
    }
    return a.multiply(x) == b;
}

SolveReport solve_augmented(const BitMatrix& a, const BitVector& b, const EliminationOptions& options)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_augmented: right-hand side has " +
                                    std::to_string(b.size()) + " entries, matrix has " +
                                    std::to_string(a.rows()) + " rows");
    const std::size_t n = a.cols();
    Echelon ech = echelon(a.augmented(b), options);

    SolveReport report;
    report.rank_augmented = ech.rank;
    report.rank_coefficient = static_cast<std::size_t>(
        std::count_if(ech.pivot_columns.begin(), ech.pivot_columns.end(),
                      [n](std::size_t c) { return c < n; }));
    report.solvable = report.rank_coefficient == report.rank_augmented;
    if (report.rank_augmented < report.rank_coefficient ||
        report.rank_augmented > report.rank_coefficient + 1)
        throw ConsistencyError("solve_augmented: rank bounds violated");
    if (!report.solvable) return report;

    if (ech.reduced) {
        // Reduced form: each pivot row with answer bit 1 selects its leading column.
        for (std::size_t k = 0; k < ech.rank; ++k)
            if (ech.form.get(ech.pivot_rows[k], n)) report.solution_support.push_back(ech.pivot_columns[k]);
    } else {
        BitVector x(n + 1);  // same stride as the augmented rows, answer bit stays 0
        const auto xw = x.words();
        for (std::size_t k = ech.rank; k-- > 0;) {
            const auto rw = ech.form.row(ech.pivot_rows[k]);
            const std::size_t p = ech.pivot_columns[k];
            Word64 acc = 0;
            for (std::size_t w = (p >> 6); w < rw.size(); ++w) acc ^= rw[w] & xw[w];
            const bool value = bit(rw, n) ^ static_cast<bool>(std::popcount(acc) & 1);
            if (value) x.set(p, true);
        }
        x.set(n, false);
        report.solution_support = x.support();
    }
    std::sort(report.solution_support.begin(), report.solution_support.end());

    if (!verify_solution(a, b, report.solution_support))
        throw ConsistencyError("solve_augmented: extracted solution does not reproduce the right-hand side");
    report.verified = true;
    return report;
}

void write_sparse(std::ostream& out, const BitMatrix& m)
{
    out << m.rows() << ' ' << m.cols() << " 2\n";
    for (const auto& [i, j] : m.entries()) out << i + 1 << ' ' << j + 1 << '\n';
    out << "0 0 0\n";
}

BitMatrix read_sparse(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("missing header", lineno);
    std::size_t rows = 0, cols = 0, modulus = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> rows >> cols >> modulus) || (hs >> extra))
            throw ParseError("malformed header, expected 'rows cols modulus'", lineno);
        if (modulus != 2) throw ParseError("modulus must be 2", lineno);
    }
    std::vector<Entry> entries;
    while (true) {
        if (!next_line()) throw ParseError("missing terminator '0 0 0'", lineno);
        std::istringstream ls(line);
        std::size_t i = 0, j = 0, z = 0;
        std::string extra;
        if (!(ls >> i >> j)) throw ParseError("malformed entry", lineno);
        if (i == 0 && j == 0) {
            if (!(ls >> z) || z != 0 || (ls >> extra)) throw ParseError("malformed terminator", lineno);
            break;
        }
        if (ls >> extra) throw ParseError("trailing data in entry", lineno);
        if (i == 0 || j == 0 || i > rows || j > cols) throw ParseError("entry out of range", lineno);
        entries.emplace_back(i - 1, j - 1);
    }
    return assemble(entries, rows, cols);
}

namespace {

constexpr char kMagic[8] = {'Q', '8', 'G', 'F', '2', 'M', 'A', 'T'};

void put_u64(std::ostream& out, std::uint64_t v)
{
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t get_u64(std::istream& in)
{
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char*>(buf), 8)) throw ParseError("truncated packed matrix", 0);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
    return v;
}

}  // namespace

void write_packed(std::ostream& out, const BitMatrix& m)
{
    out.write(kMagic, sizeof kMagic);
    put_u64(out, m.rows());
    put_u64(out, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (Word64 w : m.row(r)) put_u64(out, w);
}

BitMatrix read_packed(std::istream& in)
{
    char magic[8];
    if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0)
        throw ParseError("bad magic in packed matrix", 0);
    const std::uint64_t rows = get_u64(in);
    const std::uint64_t cols = get_u64(in);
    if (rows > (std::uint64_t{1} << 32) || cols > (std::uint64_t{1} << 32))
        throw ParseError("packed matrix dimensions too large", 0);
    BitMatrix m(rows, cols);
    const std::size_t tail = cols % 64;
    for (std::size_t r = 0; r < rows; ++r) {
        auto rw = m.row(r);
        for (auto& w : rw) w = get_u64(in);
        if (tail && (rw.back() >> tail) != 0) throw ParseError("nonzero padding bits", 0);
    }
    return m;
}

}  // namespace q8tc
