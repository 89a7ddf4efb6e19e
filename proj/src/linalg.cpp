#include "cslnc/linalg.hpp"

#include <bit>
#include <stdexcept>

namespace cslnc {

namespace {
constexpr int kWordBits = 64;

int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

void check_index(int i, int n, const char* what) {
    if (i < 0 || i >= n) throw std::out_of_range(what);
}
}  // namespace

// ---------------------------------------------------------------------------
// BitVec

BitVec::BitVec(int size) : size_(size) {
    if (size < 0) throw std::invalid_argument("BitVec: negative size");
    words_.assign(static_cast<std::size_t>(words_for(size)), 0);
}

bool BitVec::get(int i) const {
    check_index(i, size_, "BitVec::get");
    return (words_[static_cast<std::size_t>(i) / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(int i, bool value) {
    check_index(i, size_, "BitVec::set");
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[static_cast<std::size_t>(i) / kWordBits] |= mask;
    else
        words_[static_cast<std::size_t>(i) / kWordBits] &= ~mask;
}

bool BitVec::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

BitVec& BitVec::operator^=(const BitVec& rhs) {
    if (rhs.size_ != size_) throw std::invalid_argument("BitVec::^=: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

BitVec BitVec::operator^(const BitVec& rhs) const {
    BitVec out = *this;
    out ^= rhs;
    return out;
}

BitVec BitVec::shifted_up(int j) const {
    BitVec out(size_);
    if (j >= size_) return out;
    int wordShift = j / kWordBits, bitShift = j % kWordBits;
    for (std::size_t i = words_.size(); i-- > 0;) {
        std::uint64_t v = 0;
        if (static_cast<long long>(i) - wordShift >= 0) {
            v = words_[i - static_cast<std::size_t>(wordShift)] << bitShift;
            if (bitShift && static_cast<long long>(i) - wordShift - 1 >= 0)
                v |= words_[i - static_cast<std::size_t>(wordShift) - 1] >> (kWordBits - bitShift);
        }
        out.words_[i] = v;
    }
    // mask bits above size
    int tail = size_ % kWordBits;
    if (tail) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

BitVec BitVec::shifted_down(int j) const {
    BitVec out(size_);
    if (j >= size_) return out;
    int wordShift = j / kWordBits, bitShift = j % kWordBits;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t v = 0;
        if (i + static_cast<std::size_t>(wordShift) < words_.size()) {
            v = words_[i + static_cast<std::size_t>(wordShift)] >> bitShift;
            if (bitShift && i + static_cast<std::size_t>(wordShift) + 1 < words_.size())
                v |= words_[i + static_cast<std::size_t>(wordShift) + 1] << (kWordBits - bitShift);
        }
        out.words_[i] = v;
    }
    return out;
}

BitVec BitVec::rotated_right(int j) const {
    if (size_ == 0) return *this;
    j %= size_;
    if (j < 0) j += size_;
    if (j == 0) return *this;
    BitVec out = shifted_up(j);
    out ^= shifted_down(size_ - j);
    return out;
}

// ---------------------------------------------------------------------------
// BinMatrix

BinMatrix::BinMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BinMatrix: negative dimensions");
    words_per_row_ = words_for(cols);
    words_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(words_per_row_), 0);
}

BinMatrix BinMatrix::identity(int n) {
    BinMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool BinMatrix::get(int r, int c) const {
    check_index(r, rows_, "BinMatrix::get row");
    check_index(c, cols_, "BinMatrix::get col");
    return (words_[static_cast<std::size_t>(r) * words_per_row_ + static_cast<std::size_t>(c) / kWordBits] >>
            (c % kWordBits)) &
           1u;
}

void BinMatrix::set(int r, int c, bool value) {
    check_index(r, rows_, "BinMatrix::set row");
    check_index(c, cols_, "BinMatrix::set col");
    std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    std::uint64_t& word =
        words_[static_cast<std::size_t>(r) * words_per_row_ + static_cast<std::size_t>(c) / kWordBits];
    if (value)
        word |= mask;
    else
        word &= ~mask;
}

BitVec BinMatrix::row(int r) const {
    check_index(r, rows_, "BinMatrix::row");
    BitVec v(cols_);
    for (int c = 0; c < cols_; ++c)
        if (get(r, c)) v.set(c, true);
    return v;
}

void BinMatrix::set_row(int r, const BitVec& v) {
    check_index(r, rows_, "BinMatrix::set_row");
    if (v.size() != cols_) throw std::invalid_argument("BinMatrix::set_row: size mismatch");
    for (std::size_t i = 0; i < v.words().size(); ++i)
        words_[static_cast<std::size_t>(r) * words_per_row_ + i] = v.words()[i];
}

void BinMatrix::xor_row_into(int src, int dst) {
    check_index(src, rows_, "BinMatrix::xor_row_into src");
    check_index(dst, rows_, "BinMatrix::xor_row_into dst");
    std::size_t s = static_cast<std::size_t>(src) * words_per_row_;
    std::size_t d = static_cast<std::size_t>(dst) * words_per_row_;
    for (int i = 0; i < words_per_row_; ++i) words_[d + static_cast<std::size_t>(i)] ^= words_[s + static_cast<std::size_t>(i)];
}

BinMatrix BinMatrix::operator+(const BinMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("BinMatrix::+: dimension mismatch");
    BinMatrix out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] ^= rhs.words_[i];
    return out;
}

BinMatrix BinMatrix::operator*(const BinMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("BinMatrix::*: dimension mismatch");
    BinMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::size_t base = static_cast<std::size_t>(r) * words_per_row_;
        for (int wi = 0; wi < words_per_row_; ++wi) {
            std::uint64_t word = words_[base + static_cast<std::size_t>(wi)];
            while (word) {
                int bit = std::countr_zero(word);
                word &= word - 1;
                int k = wi * kWordBits + bit;
                std::size_t src = static_cast<std::size_t>(k) * rhs.words_per_row_;
                std::size_t dst = static_cast<std::size_t>(r) * out.words_per_row_;
                for (int i = 0; i < rhs.words_per_row_; ++i)
                    out.words_[dst + static_cast<std::size_t>(i)] ^= rhs.words_[src + static_cast<std::size_t>(i)];
            }
        }
    }
    return out;
}

BinMatrix BinMatrix::transposed() const {
    BinMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(c, r, true);
    return out;
}

int BinMatrix::rank() const {
    BinMatrix work = *this;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (work.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int i = 0; i < words_per_row_; ++i)
                std::swap(work.words_[static_cast<std::size_t>(pivot) * words_per_row_ + static_cast<std::size_t>(i)],
                          work.words_[static_cast<std::size_t>(rank) * words_per_row_ + static_cast<std::size_t>(i)]);
        }
        for (int r = rank + 1; r < rows_; ++r)
            if (work.get(r, c)) work.xor_row_into(rank, r);
        ++rank;
    }
    return rank;
}

BitVec operator*(const BitVec& v, const BinMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("BitVec * BinMatrix: dimension mismatch");
    BitVec out(m.cols());
    for (int i = 0; i < v.size(); ++i)
        if (v.get(i)) out ^= m.row(i);
    return out;
}

BinMatrix cyclic_perm_power(int L, long long j) {
    if (L < 1) throw std::invalid_argument("cyclic_perm_power: L must be positive");
    long long jj = j % L;
    if (jj < 0) jj += L;
    BinMatrix m(L, L);
    for (int i = 0; i < L; ++i) m.set(i, static_cast<int>((i + jj) % L), true);
    return m;
}

BinMatrix circulant_of_poly(const BinPoly& k, int L) {
    if (L < 1) throw std::invalid_argument("circulant_of_poly: L must be positive");
    BinPoly reduced = k.reduced_mod_xl_plus_1(L);
    BinMatrix m(L, L);
    for (int e : reduced.support())
        for (int i = 0; i < L; ++i) m.set(i, (i + e) % L, true);
    return m;
}

BinMatrix kron(const BinMatrix& a, const BinMatrix& b) {
    BinMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ra = 0; ra < a.rows(); ++ra)
        for (int ca = 0; ca < a.cols(); ++ca) {
            if (!a.get(ra, ca)) continue;
            for (int rb = 0; rb < b.rows(); ++rb)
                for (int cb = 0; cb < b.cols(); ++cb)
                    if (b.get(rb, cb)) out.set(ra * b.rows() + rb, ca * b.cols() + cb, true);
        }
    return out;
}

BinMatrix right_inverse(const BinMatrix& m) {
    int r = m.rows(), c = m.cols();
    // Gauss-Jordan on [m | I_r]; full row rank makes every system m x = e_j
    // consistent, and the pivot columns carry the solution.
    BinMatrix aug(r, c + r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j)
            if (m.get(i, j)) aug.set(i, j, true);
        aug.set(i, c + i, true);
    }
    std::vector<int> pivot_col(static_cast<std::size_t>(r), -1);
    int rank = 0;
    for (int col = 0; col < c && rank < r; ++col) {
        int pivot = -1;
        for (int row = rank; row < r; ++row)
            if (aug.get(row, col)) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) {
            BitVec tmp = aug.row(pivot);
            aug.set_row(pivot, aug.row(rank));
            aug.set_row(rank, tmp);
        }
        for (int row = 0; row < r; ++row)
            if (row != rank && aug.get(row, col)) aug.xor_row_into(rank, row);
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    if (rank != r) throw std::invalid_argument("right_inverse: matrix does not have full row rank");
    BinMatrix x(c, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (aug.get(i, c + j)) x.set(pivot_col[static_cast<std::size_t>(i)], j, true);
    return x;
}

BinMatrix hstack(const std::vector<BinMatrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("hstack: no blocks");
    int rows = blocks.front().rows();
    int cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
        cols += b.cols();
    }
    BinMatrix out(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < b.cols(); ++c)
                if (b.get(r, c)) out.set(r, off + c, true);
        off += b.cols();
    }
    return out;
}

BinMatrix vstack(const std::vector<BinMatrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("vstack: no blocks");
    int cols = blocks.front().cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows();
    }
    BinMatrix out(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < cols; ++c)
                if (b.get(r, c)) out.set(off + r, c, true);
        off += b.rows();
    }
    return out;
}

// ---------------------------------------------------------------------------
// FieldMatrix

FieldMatrix::FieldMatrix(const FieldContext& ctx, int rows, int cols)
    : rows_(rows), cols_(cols), ctx_(&ctx) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("FieldMatrix: negative dimensions");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                    FieldElement::zero());
}

FieldMatrix FieldMatrix::identity(const FieldContext& ctx, int n) {
    FieldMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one();
    return m;
}

FieldElement& FieldMatrix::at(int r, int c) {
    check_index(r, rows_, "FieldMatrix::at row");
    check_index(c, cols_, "FieldMatrix::at col");
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(c)];
}

const FieldElement& FieldMatrix::at(int r, int c) const {
    check_index(r, rows_, "FieldMatrix::at row");
    check_index(c, cols_, "FieldMatrix::at col");
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(c)];
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("FieldMatrix::*: dimension mismatch");
    FieldMatrix out(*ctx_, rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < rhs.cols_; ++c) {
                const FieldElement& b = rhs.at(k, c);
                if (b.is_zero()) continue;
                out.at(r, c) = ctx_->add(out.at(r, c), ctx_->mul(a, b));
            }
        }
    return out;
}

int FieldMatrix::rank() const {
    FieldMatrix work = *this;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!work.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(rank, j));
        FieldElement piv_inv = ctx_->inv(work.at(rank, c));
        for (int j = c; j < cols_; ++j) work.at(rank, j) = ctx_->mul(work.at(rank, j), piv_inv);
        for (int r = rank + 1; r < rows_; ++r) {
            FieldElement factor = work.at(r, c);
            if (factor.is_zero()) continue;
            for (int j = c; j < cols_; ++j)
                work.at(r, j) = ctx_->add(work.at(r, j), ctx_->mul(factor, work.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("FieldMatrix::inverse: not square");
    FieldMatrix work = *this;
    FieldMatrix out = identity(*ctx_, rows_);
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int r = c; r < rows_; ++r)
            if (!work.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("FieldMatrix::inverse: singular matrix");
        if (pivot != c)
            for (int j = 0; j < cols_; ++j) {
                std::swap(work.at(pivot, j), work.at(c, j));
                std::swap(out.at(pivot, j), out.at(c, j));
            }
        FieldElement piv_inv = ctx_->inv(work.at(c, c));
        for (int j = 0; j < cols_; ++j) {
            work.at(c, j) = ctx_->mul(work.at(c, j), piv_inv);
            out.at(c, j) = ctx_->mul(out.at(c, j), piv_inv);
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == c) continue;
            FieldElement factor = work.at(r, c);
            if (factor.is_zero()) continue;
            for (int j = 0; j < cols_; ++j) {
                work.at(r, j) = ctx_->add(work.at(r, j), ctx_->mul(factor, work.at(c, j)));
                out.at(r, j) = ctx_->add(out.at(r, j), ctx_->mul(factor, out.at(c, j)));
            }
        }
    }
    return out;
}

FieldElement FieldMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("FieldMatrix::determinant: not square");
    FieldMatrix work = *this;
    FieldElement det = FieldElement::one();
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int r = c; r < rows_; ++r)
            if (!work.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return FieldElement::zero();
        if (pivot != c)
            for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(c, j));
        // row swaps do not change sign in characteristic 2
        det = ctx_->mul(det, work.at(c, c));
        FieldElement piv_inv = ctx_->inv(work.at(c, c));
        for (int r = c + 1; r < rows_; ++r) {
            FieldElement factor = ctx_->mul(work.at(r, c), piv_inv);
            if (factor.is_zero()) continue;
            for (int j = c; j < cols_; ++j)
                work.at(r, j) = ctx_->add(work.at(r, j), ctx_->mul(factor, work.at(c, j)));
        }
    }
    return det;
}

bool FieldMatrix::operator==(const FieldMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

FieldMatrix vandermonde(const FieldContext& ctx) {
    int L = ctx.L();
    FieldMatrix v(ctx, L, L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            v.at(i, j) = ctx.alpha_power(static_cast<long long>(i) * j);
    return v;
}

FieldMatrix vandermonde_inverse(const FieldContext& ctx) {
    int L = ctx.L();
    FieldMatrix v(ctx, L, L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            v.at(i, j) = ctx.alpha_power(-static_cast<long long>(i) * j);
    return v;
}

}  // namespace cslnc
