#pragma once

#include <cstdint>
#include <vector>

#include "cslnc/gfpoly.hpp"

namespace cslnc {

/// Fixed-length bit row vector, word-packed.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int size);

    int size() const { return size_; }
    bool get(int i) const;
    void set(int i, bool value);
    bool is_zero() const;

    BitVec& operator^=(const BitVec& rhs);
    BitVec operator^(const BitVec& rhs) const;
    /// Circular right shift by j positions: result[c] = src[(c - j) mod n],
    /// built from two word-level shifts with an end correction.
    BitVec rotated_right(int j) const;

    bool operator==(const BitVec&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
    BitVec shifted_up(int j) const;    // toward higher indices, zero fill
    BitVec shifted_down(int j) const;  // toward lower indices, zero fill
};

/// Dense matrix over GF(2) with word-packed rows.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(int rows, int cols);
    static BinMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool value);

    BitVec row(int r) const;
    void set_row(int r, const BitVec& v);
    void xor_row_into(int src, int dst);  // row[dst] ^= row[src]

    BinMatrix operator+(const BinMatrix& rhs) const;  // entrywise XOR
    BinMatrix operator*(const BinMatrix& rhs) const;
    BinMatrix transposed() const;
    int rank() const;

    bool operator==(const BinMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row vector times matrix; v.size() must equal m.rows().
BitVec operator*(const BitVec& v, const BinMatrix& m);

/// L x L cyclic permutation matrix to the j-th power: row i has its single
/// one at column (i + j) mod L.
BinMatrix cyclic_perm_power(int L, long long j);

/// Circulant k(C_L): the sum of C_L^i over the support of k mod x^L + 1.
BinMatrix circulant_of_poly(const BinPoly& k, int L);

BinMatrix kron(const BinMatrix& a, const BinMatrix& b);

/// Right inverse X with m * X = I; m must have full row rank.
BinMatrix right_inverse(const BinMatrix& m);

BinMatrix hstack(const std::vector<BinMatrix>& blocks);
BinMatrix vstack(const std::vector<BinMatrix>& blocks);

/// Dense matrix over GF(2^{m_L}); all entries live in one shared context,
/// which must outlive the matrix.
class FieldMatrix {
public:
    FieldMatrix(const FieldContext& ctx, int rows, int cols);
    static FieldMatrix identity(const FieldContext& ctx, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldContext& ctx() const { return *ctx_; }

    FieldElement& at(int r, int c);
    const FieldElement& at(int r, int c) const;

    FieldMatrix operator*(const FieldMatrix& rhs) const;
    int rank() const;
    FieldMatrix inverse() const;  // square, throws if singular
    FieldElement determinant() const;

    bool operator==(const FieldMatrix& rhs) const;

private:
    int rows_ = 0, cols_ = 0;
    const FieldContext* ctx_ = nullptr;
    std::vector<FieldElement> entries_;
};

/// V_L with entry (i, j) = alpha^(ij) and its closed-form inverse with
/// entry (i, j) = alpha^(-ij).
FieldMatrix vandermonde(const FieldContext& ctx);
FieldMatrix vandermonde_inverse(const FieldContext& ctx);

}  // namespace cslnc
