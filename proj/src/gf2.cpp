#include "magiclab/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace magiclab {

namespace {
int word_count(int n) { return (n + 63) / 64; }
}

BitVector::BitVector(int n) : n_(n), w_(word_count(n), 0) {
    if (n <= 0) throw std::invalid_argument("BitVector dimension must be positive");
}

BitVector BitVector::from_index(int n, std::uint64_t x) {
    if (n > 63) throw std::invalid_argument("from_index requires n <= 63");
    BitVector v(n);
    if (n < 63 && (x >> n) != 0) throw std::invalid_argument("index out of range for dimension");
    v.w_[0] = x;
    return v;
}

BitVector BitVector::unit(int n, int i) {
    BitVector v(n);
    v.set(i, true);
    return v;
}

BitVector BitVector::ones(int n) {
    BitVector v(n);
    for (int i = 0; i < n; ++i) v.set(i, true);
    return v;
}

BitVector BitVector::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty bit string");
    BitVector v((int)s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set((int)i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    return v;
}

bool BitVector::get(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("bit index out of range");
    return (w_[i >> 6] >> (i & 63)) & 1;
}

void BitVector::set(int i, bool v) {
    if (i < 0 || i >= n_) throw std::out_of_range("bit index out of range");
    if (v)
        w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    else
        w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
}

int BitVector::weight() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (n_ != o.n_) throw std::invalid_argument("BitVector dimension mismatch");
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

std::string BitVector::str() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::uint64_t zeta(const BitVector& a) {
    if (a.dim() > 63) throw std::overflow_error("zeta requires dimension <= 63");
    return a.words()[0];
}

BitMatrix::BitMatrix(int n) : n_(n), rows_(n, BitVector(n)) {
    if (n <= 0) throw std::invalid_argument("BitMatrix dimension must be positive");
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::all_ones(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, true);
    return m;
}

BitMatrix BitMatrix::circulant(const BitVector& first_row) {
    int n = first_row.dim();
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, first_row.get(((j - i) % n + n) % n));
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
    int n = (int)rows.size();
    for (auto& r : rows)
        if (r.dim() != n) throw std::invalid_argument("matrix must be square");
    BitMatrix m;
    m.n_ = n;
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::parse_lines(const std::vector<std::string>& lines) {
    std::vector<BitVector> rows;
    rows.reserve(lines.size());
    for (auto& l : lines) rows.push_back(BitVector::parse(l));
    return from_rows(std::move(rows));
}

BitVector BitMatrix::column(int j) const {
    BitVector c(n_);
    for (int i = 0; i < n_; ++i) c.set(i, get(i, j));
    return c;
}

BitVector BitMatrix::apply(const BitVector& u) const {
    if (u.dim() != n_) throw std::invalid_argument("matrix/vector dimension mismatch");
    BitVector out(n_);
    for (int i = 0; i < n_; ++i) {
        std::uint64_t acc = 0;
        const auto& rw = rows_[i].words();
        const auto& uw = u.words();
        for (size_t k = 0; k < rw.size(); ++k) acc ^= rw[k] & uw[k];
        out.set(i, std::popcount(acc) & 1);
    }
    return out;
}

int BitMatrix::rank() const {
    std::vector<std::vector<std::uint64_t>> w;
    w.reserve(n_);
    for (auto& r : rows_) w.push_back(r.words());
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        int word = col >> 6;
        std::uint64_t mask = std::uint64_t(1) << (col & 63);
        int pivot = -1;
        for (int i = rank; i < n_; ++i)
            if (w[i][word] & mask) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(w[rank], w[pivot]);
        for (int i = 0; i < n_; ++i) {
            if (i != rank && (w[i][word] & mask))
                for (size_t k = 0; k < w[i].size(); ++k) w[i][k] ^= w[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
    // Gauss-Jordan on [M | I].
    std::vector<BitVector> left(rows_), right;
    right.reserve(n_);
    for (int i = 0; i < n_; ++i) right.push_back(BitVector::unit(n_, i));
    int r = 0;
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int i = r; i < n_; ++i)
            if (left[i].get(col)) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(left[r], left[pivot]);
        std::swap(right[r], right[pivot]);
        for (int i = 0; i < n_; ++i) {
            if (i != r && left[i].get(col)) {
                left[i] ^= left[r];
                right[i] ^= right[r];
            }
        }
        ++r;
    }
    return from_rows(std::move(right));
}

std::vector<int> BitMatrix::row_sums() const {
    std::vector<int> s(n_);
    for (int i = 0; i < n_; ++i) s[i] = rows_[i].weight();
    return s;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

std::vector<std::string> BitMatrix::to_lines() const {
    std::vector<std::string> out;
    out.reserve(n_);
    for (auto& r : rows_) out.push_back(r.str());
    return out;
}

}  // namespace magiclab
