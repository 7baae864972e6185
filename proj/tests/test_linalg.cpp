#include <doctest.h>

#include <random>
#include <stdexcept>

#include "domset/linalg.hpp"

using namespace domset;

namespace {

BitMatrix random_matrix(int rows, int cols, double density, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution flip(density);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (flip(rng)) m.set(i, j);
    return m;
}

CountMatrix naive_count(const BitMatrix& a, const BitMatrix& b) {
    CountMatrix out;
    out.rows = a.rows();
    out.cols = b.cols();
    out.data.assign(static_cast<size_t>(out.rows) * out.cols, 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            for (int k = 0; k < a.cols(); ++k)
                if (a.get(i, k) && b.get(k, j)) ++out.at(i, j);
    return out;
}

std::vector<std::pair<int, int>> naive_max_entry(const BitMatrix& b, const BitMatrix& c) {
    CountMatrix prod = naive_count(b, c);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < b.rows(); ++i) {
        int rowsum = 0;
        for (int k = 0; k < b.cols(); ++k)
            if (b.get(i, k)) ++rowsum;
        for (int j = 0; j < c.cols(); ++j)
            if (prod.at(i, j) == rowsum) out.emplace_back(i, j);
    }
    return out;
}

}  // namespace

TEST_CASE("identity and all-ones products") {
    BitMatrix id(3, 3), ones23(2, 3), ones32(3, 2);
    for (int i = 0; i < 3; ++i) id.set(i, i);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) ones23.set(i, j);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) ones32.set(i, j);

    BitMatrix p = product_bool(ones23, ones32);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(p.get(i, j));

    CountMatrix c = product_count(id, id);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(c.at(i, j) == (i == j ? 1 : 0));

    CountMatrix n = product_count(ones23, ones32);
    CHECK(n.at(0, 0) == 3);
    CHECK(n.at(1, 1) == 3);
}

TEST_CASE("dimension mismatch rejected") {
    BitMatrix a23(2, 3), a22(2, 2), a42(4, 2);
    CHECK_THROWS_AS(product_bool(a23, a22), std::invalid_argument);
    CHECK_THROWS_AS(max_entry_product(a23, a42), std::invalid_argument);
}

TEST_CASE("products agree with the naive triple loop") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(rng() % 70);
        int k = 1 + static_cast<int>(rng() % 70);
        int c = 1 + static_cast<int>(rng() % 70);
        BitMatrix a = random_matrix(r, k, 0.3, rng);
        BitMatrix b = random_matrix(k, c, 0.3, rng);
        CountMatrix exact = product_count(a, b);
        CountMatrix naive = naive_count(a, b);
        REQUIRE(exact.data == naive.data);
        BitMatrix booled = product_bool(a, b);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) REQUIRE(booled.get(i, j) == (naive.at(i, j) > 0));
    }
}

TEST_CASE("max-entry witnesses: identity against all-ones") {
    BitMatrix b(2, 2), c(2, 2);
    b.set(0, 0);
    b.set(1, 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c.set(i, j);
    auto w = max_entry_product(b, c);
    CHECK(w.size() == 4);
}

TEST_CASE("max-entry zero rows match every column") {
    BitMatrix b(3, 4), c(4, 2);
    auto w = max_entry_product(b, c);
    CHECK(w.size() == 6);
}

TEST_CASE("max-entry exact equals the definition oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int r = 1 + static_cast<int>(rng() % 20);
        int k = 1 + static_cast<int>(rng() % 20);
        int c = 1 + static_cast<int>(rng() % 20);
        BitMatrix b = random_matrix(r, k, 0.25, rng);
        BitMatrix cm = random_matrix(k, c, 0.7, rng);
        REQUIRE(max_entry_product(b, cm) == naive_max_entry(b, cm));
    }
}

TEST_CASE("hashed max-entry equals exact on seeded instances") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(rng() % 30);
        int k = 1 + static_cast<int>(rng() % 40);
        int c = 1 + static_cast<int>(rng() % 30);
        BitMatrix b = random_matrix(r, k, 0.2, rng);
        BitMatrix cm = random_matrix(k, c, 0.75, rng);
        auto exact = max_entry_product(b, cm);
        auto hashed = max_entry_product(b, cm, MaxEntryMode::with_hashing(rng()));
        REQUIRE(hashed == exact);
    }
}

TEST_CASE("transpose involution") {
    std::mt19937_64 rng(3);
    BitMatrix m = random_matrix(17, 90, 0.4, rng);
    BitMatrix back = m.transposed().transposed();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) REQUIRE(m.get(i, j) == back.get(i, j));
}
