#pragma once

#include <cstdint>
#include <vector>

namespace domset {

/// Row-major bit-packed boolean matrix; trailing bits of the last word of
/// each row are always zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const;
    void set(int i, int j, bool value = true);
    int row_popcount(int i) const;

    int words_per_row() const { return words_per_row_; }
    const uint64_t* row(int i) const { return data_.data() + static_cast<size_t>(i) * words_per_row_; }
    uint64_t* row(int i) { return data_.data() + static_cast<size_t>(i) * words_per_row_; }

    BitMatrix transposed() const;

private:
    int rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<uint64_t> data_;
};

struct CountMatrix {
    int rows = 0, cols = 0;
    std::vector<int> data;  // row-major

    int at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
    int& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
};

BitMatrix product_bool(const BitMatrix& a, const BitMatrix& b);
CountMatrix product_count(const BitMatrix& a, const BitMatrix& b);

struct MaxEntryMode {
    bool hashed = false;
    uint64_t seed = 0;
    int repetitions = 0;  // 0 = auto: ceil(log2(rows*cols)) + 8

    static MaxEntryMode exact() { return {}; }
    static MaxEntryMode with_hashing(uint64_t seed, int repetitions = 0) {
        return {true, seed, repetitions};
    }
};

/// All pairs (i, j) with (B·C)[i][j] equal to the popcount of row i of B.
/// Rows with zero popcount match every column (the sum condition holds
/// vacuously). Hashed mode buckets the inner dimension with a seeded
/// generator over several rounds to prune candidates, then re-verifies
/// each survivor exactly, so reported pairs are always true witnesses.
std::vector<std::pair<int, int>> max_entry_product(const BitMatrix& b, const BitMatrix& c,
                                                   MaxEntryMode mode = MaxEntryMode::exact());

}  // namespace domset
