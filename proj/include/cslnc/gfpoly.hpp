#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cslnc {

/// Polynomial over GF(2). Bit i of the packed words is the coefficient of
/// x^i; no trailing zero words are kept, so the zero polynomial is empty.
class BinPoly {
public:
    BinPoly() = default;

    static BinPoly one();
    static BinPoly monomial(int exponent);
    static BinPoly from_support(const std::vector<int>& exponents);
    /// Parses a low-degree-first '0'/'1' string ("1101" = 1 + x + x^3).
    static BinPoly parse(const std::string& bits);

    bool is_zero() const { return words_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool coeff(int i) const;
    void set_coeff(int i, bool value);
    int weight() const;
    std::vector<int> support() const;
    std::string to_string() const;  // low-degree-first, "0" for zero

    BinPoly operator+(const BinPoly& rhs) const;
    BinPoly operator*(const BinPoly& rhs) const;
    /// Quotient and remainder; the divisor must be nonzero.
    std::pair<BinPoly, BinPoly> divmod(const BinPoly& divisor) const;
    BinPoly operator%(const BinPoly& divisor) const;
    /// Image in GF(2)[x]/(x^L + 1): exponents folded modulo L.
    BinPoly reduced_mod_xl_plus_1(int L) const;

    bool operator==(const BinPoly&) const = default;
    /// Orders polynomials by packed integer value (bit i weighted 2^i).
    static bool integer_less(const BinPoly& a, const BinPoly& b);

private:
    std::vector<std::uint64_t> words_;
    void trim();
    void xor_shifted(const BinPoly& src, int shift);
};

BinPoly gcd(BinPoly a, BinPoly b);

/// Distinct-degree test: f of degree n > 0 is irreducible iff
/// gcd(f, x^(2^i) + x) = 1 for all 1 <= i <= n/2.
bool is_irreducible(const BinPoly& f);

/// L-th cyclotomic polynomial over GF(2); L must be odd.
BinPoly cyclotomic_polynomial(int L);

/// Smallest m >= 1 with 2^m = 1 (mod L). Rejects even L and L < 3.
int multiplicative_order_of_two(long long L);

/// Euler's totient via trial-division factorization; n >= 1.
long long euler_phi(long long n);

/// Distinct prime factors in ascending order; n >= 2.
std::vector<long long> prime_factors(long long n);

/// Partition of {0,...,L-1} into doubling orbits modulo L (L odd >= 3).
/// Each block starts at its smallest member and follows the orbit
/// j -> 2j -> 4j -> ...; blocks are sorted by that representative.
std::vector<std::vector<int>> cyclotomic_cosets(int L);

/// Element of GF(2^m), m <= 128, as coordinates in the polynomial basis
/// {1, alpha, ..., alpha^(m-1)}. Addition is coordinatewise XOR.
struct FieldElement {
    std::array<std::uint64_t, 2> w{0, 0};

    bool is_zero() const { return w[0] == 0 && w[1] == 0; }
    bool is_one() const { return w[0] == 1 && w[1] == 0; }
    bool operator==(const FieldElement&) const = default;

    static FieldElement zero() { return {}; }
    static FieldElement one() { return {{1, 0}}; }
};

struct FieldElementHash {
    std::size_t operator()(const FieldElement& e) const;
};

/// GF(2^{m_L}) presented as GF(2)[x]/(f) where f is an irreducible
/// degree-m_L divisor of x^L + 1 whose residue class alpha = x is a
/// primitive L-th root of unity. Immutable once built; all operations are
/// pure, so a context may be shared freely across threads.
class FieldContext {
public:
    /// Builds the canonical context for odd L >= 3: the modulus is the
    /// qualifying irreducible polynomial with the smallest packed integer
    /// value, which makes every derived quantity reproducible bit-exactly.
    static FieldContext build(int L);
    /// Builds a context over a caller-supplied modulus after validating
    /// that it is irreducible of degree m_L with x of order exactly L.
    static FieldContext build(int L, const BinPoly& modulus);

    int L() const { return block_length_; }
    int m() const { return ext_degree_; }
    long long phi() const { return totient_; }
    const BinPoly& modulus() const { return modulus_; }

    const std::vector<std::vector<int>>& cosets() const { return cosets_; }
    const std::vector<int>& coset_reps() const { return reps_; }
    /// R = {1 <= r <= L-1 : gcd(r, L) = 1}, ascending.
    const std::vector<int>& coprime_residues() const { return coprime_; }
    /// Representatives of the phi(L)/m_L cosets contained in R.
    const std::vector<int>& coprime_coset_reps() const { return coprime_reps_; }

    FieldElement alpha() const { return alpha_pow_[1 % block_length_]; }
    FieldElement alpha_power(long long j) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // throws on zero
    FieldElement pow(const FieldElement& a, long long e) const;
    FieldElement frobenius(const FieldElement& a, int j) const;  // a^(2^j)

    FieldElement element_from_poly(const BinPoly& p) const;
    BinPoly poly_from_element(const FieldElement& e) const;

    /// Evaluation of k(x) at x = alpha^j after reduction mod x^L + 1.
    FieldElement eval_at_alpha_power(const BinPoly& k, long long j) const;

private:
    int block_length_ = 0;
    int ext_degree_ = 0;
    long long totient_ = 0;
    BinPoly modulus_;
    std::array<std::uint64_t, 3> modulus_words_{};
    std::vector<FieldElement> alpha_pow_;
    std::vector<std::vector<int>> cosets_;
    std::vector<int> reps_;
    std::vector<int> coprime_;
    std::vector<int> coprime_reps_;

    void init_tables();
};

}  // namespace cslnc
