#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magiclab {

// Vectors and square matrices over GF(2), packed into 64-bit words.
//
// Bit order convention, used everywhere in this project: index 0 is the
// least significant bit of the zeta encoding, so a vector prints with
// index 0 first and the most significant index last.

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int n);

    // Bits of x, least significant first. Requires n <= 63 and x < 2^n.
    static BitVector from_index(int n, std::uint64_t x);
    static BitVector unit(int n, int i);
    static BitVector ones(int n);
    // Parses a string of '0'/'1' characters, index 0 first.
    static BitVector parse(std::string_view s);

    int dim() const { return n_; }
    bool get(int i) const;
    void set(int i, bool v);
    int weight() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator<(const BitVector& a, const BitVector& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.w_ < b.w_;
    }

    std::string str() const;
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// zeta(a) = sum a_i 2^i, the base-2 evaluation of a bit-vector.
// Bijective from F_2^n onto {0, ..., 2^n - 1}. Requires dim <= 63.
std::uint64_t zeta(const BitVector& a);

class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n);  // zero matrix

    static BitMatrix identity(int n);
    static BitMatrix all_ones(int n);
    // Row i is the first row cyclically shifted right by i positions.
    static BitMatrix circulant(const BitVector& first_row);
    static BitMatrix from_rows(std::vector<BitVector> rows);
    // One row per line, '0'/'1' characters, index 0 first.
    static BitMatrix parse_lines(const std::vector<std::string>& lines);

    int dim() const { return n_; }
    const BitVector& row(int i) const { return rows_[i]; }
    BitVector column(int j) const;
    bool get(int i, int j) const { return rows_[i].get(j); }
    void set(int i, int j, bool v) { rows_[i].set(j, v); }

    // Matrix-vector product over GF(2). Throws on dimension mismatch.
    BitVector apply(const BitVector& u) const;

    // Gaussian elimination with deterministic leftmost pivoting.
    int rank() const;
    bool is_nonsingular() const { return rank() == n_; }
    std::optional<BitMatrix> inverse() const;

    // Number of ones per row, counted in the integers.
    std::vector<int> row_sums() const;

    BitMatrix transpose() const;
    std::vector<std::string> to_lines() const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    std::vector<BitVector> rows_;
};

}  // namespace magiclab
