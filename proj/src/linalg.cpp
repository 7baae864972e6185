#include "domset/linalg.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace domset {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    words_per_row_ = (cols + 63) / 64;
    data_.assign(static_cast<size_t>(rows) * words_per_row_, 0);
}

bool BitMatrix::get(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1ull;
}

void BitMatrix::set(int i, int j, bool value) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("bit matrix index out of range");
    uint64_t bit = 1ull << (j & 63);
    if (value)
        row(i)[j >> 6] |= bit;
    else
        row(i)[j >> 6] &= ~bit;
}

int BitMatrix::row_popcount(int i) const {
    int total = 0;
    const uint64_t* r = row(i);
    for (int w = 0; w < words_per_row_; ++w) total += std::popcount(r[w]);
    return total;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        const uint64_t* r = row(i);
        for (int w = 0; w < words_per_row_; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int j = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                out.set(j, i);
            }
        }
    }
    return out;
}

namespace {

void check_inner(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
}

}  // namespace

BitMatrix product_bool(const BitMatrix& a, const BitMatrix& b) {
    check_inner(a, b);
    BitMatrix bt = b.transposed();
    BitMatrix out(a.rows(), b.cols());
    int words = a.words_per_row();
    for (int i = 0; i < a.rows(); ++i) {
        const uint64_t* ra = a.row(i);
        for (int j = 0; j < b.cols(); ++j) {
            const uint64_t* rb = bt.row(j);
            for (int w = 0; w < words; ++w)
                if (ra[w] & rb[w]) {
                    out.set(i, j);
                    break;
                }
        }
    }
    return out;
}

CountMatrix product_count(const BitMatrix& a, const BitMatrix& b) {
    check_inner(a, b);
    BitMatrix bt = b.transposed();
    CountMatrix out;
    out.rows = a.rows();
    out.cols = b.cols();
    out.data.assign(static_cast<size_t>(out.rows) * out.cols, 0);
    int words = a.words_per_row();
    for (int i = 0; i < a.rows(); ++i) {
        const uint64_t* ra = a.row(i);
        for (int j = 0; j < b.cols(); ++j) {
            const uint64_t* rb = bt.row(j);
            int sum = 0;
            for (int w = 0; w < words; ++w) sum += std::popcount(ra[w] & rb[w]);
            out.at(i, j) = sum;
        }
    }
    return out;
}

namespace {

// pairs (i, j) whose product entry reaches the row popcount, computed by
// the direct count product
std::vector<std::pair<int, int>> max_entry_exact(const BitMatrix& b, const BitMatrix& c) {
    CountMatrix prod = product_count(b, c);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < b.rows(); ++i) {
        int rowsum = b.row_popcount(i);
        for (int j = 0; j < c.cols(); ++j)
            if (prod.at(i, j) == rowsum) out.emplace_back(i, j);
    }
    return out;
}

// does row i of b imply column j of c on every inner index?
bool pair_is_witness(const BitMatrix& b, const BitMatrix& ct, int i, int j) {
    const uint64_t* rb = b.row(i);
    const uint64_t* rc = ct.row(j);
    for (int w = 0; w < b.words_per_row(); ++w)
        if (rb[w] & ~rc[w]) return false;
    return true;
}

}  // namespace

std::vector<std::pair<int, int>> max_entry_product(const BitMatrix& b, const BitMatrix& c,
                                                   MaxEntryMode mode) {
    check_inner(b, c);
    if (!mode.hashed) return max_entry_exact(b, c);

    int inner = b.cols();
    long long cells = static_cast<long long>(b.rows()) * std::max(1, c.cols());
    int reps = mode.repetitions;
    if (reps <= 0) reps = std::bit_width(static_cast<uint64_t>(std::max(1ll, cells))) + 8;
    int groups = std::max(1, (inner + 7) / 8);

    // candidate pairs surviving every round; a witness passes each round's
    // grouped test by construction, so pruning never loses one
    BitMatrix alive(b.rows(), std::max(1, c.cols()));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) alive.set(i, j);

    std::mt19937_64 rng(mode.seed);
    std::vector<int> bucket(inner);
    for (int rep = 0; rep < reps; ++rep) {
        for (int k = 0; k < inner; ++k)
            bucket[k] = static_cast<int>(rng() % static_cast<uint64_t>(groups));
        BitMatrix bg(b.rows(), groups);
        for (int i = 0; i < b.rows(); ++i) {
            const uint64_t* r = b.row(i);
            for (int w = 0; w < b.words_per_row(); ++w) {
                uint64_t bits = r[w];
                while (bits) {
                    int k = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    bg.set(i, bucket[k]);
                }
            }
        }
        BitMatrix cg(groups, c.cols());
        for (int k = 0; k < inner; ++k) {
            const uint64_t* r = c.row(k);
            for (int w = 0; w < c.words_per_row(); ++w) {
                uint64_t bits = r[w];
                while (bits) {
                    int j = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    cg.set(bucket[k], j);
                }
            }
        }
        CountMatrix prod = product_count(bg, cg);
        for (int i = 0; i < b.rows(); ++i) {
            int rowsum = bg.row_popcount(i);
            for (int j = 0; j < c.cols(); ++j)
                if (prod.at(i, j) != rowsum) alive.set(i, j, false);
        }
    }

    BitMatrix ct = c.transposed();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            if (alive.get(i, j) && pair_is_witness(b, ct, i, j)) out.emplace_back(i, j);
    return out;
}

}  // namespace domset
