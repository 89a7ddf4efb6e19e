#include "cslnc/gfpoly.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cslnc {

namespace {
constexpr int kWordBits = 64;
}  // namespace

// ---------------------------------------------------------------------------
// BinPoly

void BinPoly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinPoly BinPoly::one() { return monomial(0); }

BinPoly BinPoly::monomial(int exponent) {
    if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
    BinPoly p;
    p.set_coeff(exponent, true);
    return p;
}

BinPoly BinPoly::from_support(const std::vector<int>& exponents) {
    BinPoly p;
    for (int e : exponents) p.set_coeff(e, !p.coeff(e));
    return p;
}

BinPoly BinPoly::parse(const std::string& bits) {
    BinPoly p;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            p.set_coeff(static_cast<int>(i), true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BinPoly::parse: expected '0'/'1' string");
    }
    return p;
}

int BinPoly::degree() const {
    if (words_.empty()) return -1;
    int top = static_cast<int>(words_.size()) - 1;
    return top * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
}

bool BinPoly::coeff(int i) const {
    if (i < 0) return false;
    std::size_t word = static_cast<std::size_t>(i) / kWordBits;
    if (word >= words_.size()) return false;
    return (words_[word] >> (i % kWordBits)) & 1u;
}

void BinPoly::set_coeff(int i, bool value) {
    if (i < 0) throw std::invalid_argument("set_coeff: negative exponent");
    std::size_t word = static_cast<std::size_t>(i) / kWordBits;
    if (word >= words_.size()) {
        if (!value) return;
        words_.resize(word + 1, 0);
    }
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[word] |= mask;
    else
        words_[word] &= ~mask;
    trim();
}

int BinPoly::weight() const {
    int w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

std::vector<int> BinPoly::support() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t word = words_[i];
        while (word) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            out.push_back(static_cast<int>(i) * kWordBits + bit);
        }
    }
    return out;
}

std::string BinPoly::to_string() const {
    int d = degree();
    if (d < 0) return "0";
    std::string s(static_cast<std::size_t>(d) + 1, '0');
    for (int i = 0; i <= d; ++i)
        if (coeff(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

BinPoly BinPoly::operator+(const BinPoly& rhs) const {
    BinPoly out = words_.size() >= rhs.words_.size() ? *this : rhs;
    const BinPoly& small = words_.size() >= rhs.words_.size() ? rhs : *this;
    for (std::size_t i = 0; i < small.words_.size(); ++i) out.words_[i] ^= small.words_[i];
    out.trim();
    return out;
}

void BinPoly::xor_shifted(const BinPoly& src, int shift) {
    if (src.words_.empty()) return;
    int wordShift = shift / kWordBits;
    int bitShift = shift % kWordBits;
    std::size_t need = src.words_.size() + static_cast<std::size_t>(wordShift) + 1;
    if (words_.size() < need) words_.resize(need, 0);
    for (std::size_t i = 0; i < src.words_.size(); ++i) {
        words_[i + static_cast<std::size_t>(wordShift)] ^= src.words_[i] << bitShift;
        if (bitShift)
            words_[i + static_cast<std::size_t>(wordShift) + 1] ^=
                src.words_[i] >> (kWordBits - bitShift);
    }
    trim();
}

BinPoly BinPoly::operator*(const BinPoly& rhs) const {
    BinPoly out;
    if (is_zero() || rhs.is_zero()) return out;
    for (int i : support()) out.xor_shifted(rhs, i);
    return out;
}

std::pair<BinPoly, BinPoly> BinPoly::divmod(const BinPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    BinPoly q;
    BinPoly r = *this;
    int dd = divisor.degree();
    while (r.degree() >= dd) {
        int shift = r.degree() - dd;
        q.set_coeff(shift, true);
        r.xor_shifted(divisor, shift);
    }
    return {q, r};
}

BinPoly BinPoly::operator%(const BinPoly& divisor) const { return divmod(divisor).second; }

BinPoly BinPoly::reduced_mod_xl_plus_1(int L) const {
    if (L < 1) throw std::invalid_argument("reduced_mod_xl_plus_1: L must be positive");
    BinPoly out;
    for (int i : support()) out.set_coeff(i % L, !out.coeff(i % L));
    return out;
}

bool BinPoly::integer_less(const BinPoly& a, const BinPoly& b) {
    if (a.words_.size() != b.words_.size()) return a.words_.size() < b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
}

BinPoly gcd(BinPoly a, BinPoly b) {
    while (!b.is_zero()) {
        BinPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const BinPoly& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (!f.coeff(0)) return false;  // divisible by x
    BinPoly x = BinPoly::monomial(1);
    BinPoly t = x % f;
    for (int i = 1; i <= n / 2; ++i) {
        t = (t * t) % f;  // t = x^(2^i) mod f
        if (gcd(f, t + x).degree() != 0) return false;
    }
    return true;
}

BinPoly cyclotomic_polynomial(int L) {
    if (L < 1 || L % 2 == 0) throw std::invalid_argument("cyclotomic_polynomial: L must be odd and positive");
    std::map<int, BinPoly> memo;
    memo[1] = BinPoly::parse("11");  // x + 1
    for (int d = 3; d <= L; d += 2) {
        if (L % d != 0) continue;
        BinPoly num = BinPoly::monomial(d) + BinPoly::one();
        for (const auto& [dd, q] : memo) {
            if (d % dd != 0) continue;
            auto [quot, rem] = num.divmod(q);
            assert(rem.is_zero());
            num = quot;
        }
        memo[d] = num;
    }
    return memo.at(L);
}

// ---------------------------------------------------------------------------
// Integer helpers

int multiplicative_order_of_two(long long L) {
    if (L < 3 || L % 2 == 0)
        throw std::invalid_argument("multiplicative_order_of_two: L must be odd and >= 3");
    long long cur = 2 % L;
    int order = 1;
    while (cur != 1) {
        cur = (cur * 2) % L;
        ++order;
    }
    return order;
}

long long euler_phi(long long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    long long result = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long long> prime_factors(long long n) {
    if (n < 2) throw std::invalid_argument("prime_factors: n must be >= 2");
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::vector<int>> cyclotomic_cosets(int L) {
    if (L < 3 || L % 2 == 0)
        throw std::invalid_argument("cyclotomic_cosets: L must be odd and >= 3");
    std::vector<bool> seen(static_cast<std::size_t>(L), false);
    std::vector<std::vector<int>> blocks;
    for (int j = 0; j < L; ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        std::vector<int> orbit;
        int cur = j;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            orbit.push_back(cur);
            cur = (2 * cur) % L;
        } while (cur != j);
        blocks.push_back(std::move(orbit));
    }
    return blocks;
}

// ---------------------------------------------------------------------------
// FieldElement

std::size_t FieldElementHash::operator()(const FieldElement& e) const {
    std::uint64_t h = e.w[0] * 0x9e3779b97f4a7c15ULL;
    h ^= e.w[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// FieldContext

namespace {

// Trace map h + h^2 + ... + h^(2^(m-1)) mod g.
BinPoly trace_map(const BinPoly& h, int m, const BinPoly& g) {
    BinPoly s = h % g;
    BinPoly acc = s;
    for (int i = 1; i < m; ++i) {
        s = (s * s) % g;
        acc = acc + s;
    }
    return acc;
}

// Splits a product of distinct irreducibles of common degree m into its
// factors, scanning candidate trace arguments in a fixed order so the
// result is deterministic.
std::vector<BinPoly> equal_degree_factors(const BinPoly& f, int m) {
    std::vector<BinPoly> work{f};
    std::vector<BinPoly> done;
    while (!work.empty()) {
        BinPoly g = work.back();
        work.pop_back();
        if (g.degree() == m) {
            done.push_back(g);
            continue;
        }
        bool split = false;
        // Candidate h runs over packed integer encodings 2, 3, 4, ... (x,
        // x+1, x^2, ...); a splitting h of degree < deg g always exists.
        for (std::uint64_t enc = 2; !split; ++enc) {
            BinPoly h;
            for (int b = 0; b < kWordBits; ++b)
                if ((enc >> b) & 1u) h.set_coeff(b, true);
            if (h.degree() >= g.degree()) throw std::logic_error("equal_degree_factors: no splitter found");
            BinPoly c = gcd(g, trace_map(h, m, g));
            if (c.degree() > 0 && c.degree() < g.degree()) {
                auto [quot, rem] = g.divmod(c);
                assert(rem.is_zero());
                work.push_back(c);
                work.push_back(quot);
                split = true;
            }
        }
    }
    std::sort(done.begin(), done.end(), BinPoly::integer_less);
    return done;
}

bool x_has_order_exactly(const BinPoly& modulus, long long L) {
    auto pow_x_mod = [&](long long e) {
        BinPoly r = BinPoly::one();
        BinPoly b = BinPoly::monomial(1) % modulus;
        while (e > 0) {
            if (e & 1) r = (r * b) % modulus;
            b = (b * b) % modulus;
            e >>= 1;
        }
        return r;
    };
    if (!(pow_x_mod(L) == BinPoly::one())) return false;
    for (long long p : prime_factors(L))
        if (pow_x_mod(L / p) == BinPoly::one()) return false;
    return true;
}

}  // namespace

FieldContext FieldContext::build(int L) {
    int m = multiplicative_order_of_two(L);
    if (m > 128)
        throw std::invalid_argument("FieldContext: m_L > 128 exceeds the element capacity");
    BinPoly q = cyclotomic_polynomial(L);
    BinPoly modulus;
    if (q.degree() == m) {
        modulus = q;  // Q_L itself is irreducible
    } else {
        modulus = equal_degree_factors(q, m).front();
    }
    return build(L, modulus);
}

FieldContext FieldContext::build(int L, const BinPoly& modulus) {
    int m = multiplicative_order_of_two(L);
    if (m > 128)
        throw std::invalid_argument("FieldContext: m_L > 128 exceeds the element capacity");
    if (modulus.degree() != m)
        throw std::invalid_argument("FieldContext: modulus degree differs from m_L");
    if (!is_irreducible(modulus))
        throw std::invalid_argument("FieldContext: modulus is not irreducible");
    if (!x_has_order_exactly(modulus, L))
        throw std::invalid_argument("FieldContext: x does not have order L modulo the modulus");

    FieldContext ctx;
    ctx.block_length_ = L;
    ctx.ext_degree_ = m;
    ctx.totient_ = euler_phi(L);
    ctx.modulus_ = modulus;
    ctx.init_tables();
    return ctx;
}

void FieldContext::init_tables() {
    for (int i : modulus_.support())
        modulus_words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);

    alpha_pow_.assign(static_cast<std::size_t>(block_length_), FieldElement::zero());
    FieldElement cur = FieldElement::one();
    FieldElement a = element_from_poly(BinPoly::monomial(1));
    for (int j = 0; j < block_length_; ++j) {
        alpha_pow_[static_cast<std::size_t>(j)] = cur;
        cur = mul(cur, a);
    }
    assert(cur.is_one());  // alpha^L = 1

    cosets_ = cyclotomic_cosets(block_length_);
    for (const auto& blk : cosets_) reps_.push_back(blk.front());
    for (int r = 1; r < block_length_; ++r)
        if (std::gcd(r, block_length_) == 1) coprime_.push_back(r);
    assert(static_cast<long long>(coprime_.size()) == totient_);
    for (const auto& blk : cosets_)
        if (std::gcd(blk.front(), block_length_) == 1) coprime_reps_.push_back(blk.front());
}

FieldElement FieldContext::alpha_power(long long j) const {
    long long idx = j % block_length_;
    if (idx < 0) idx += block_length_;
    return alpha_pow_[static_cast<std::size_t>(idx)];
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
    return FieldElement{{a.w[0] ^ b.w[0], a.w[1] ^ b.w[1]}};
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
    std::array<std::uint64_t, 4> acc{};
    for (int wi = 0; wi < 2; ++wi) {
        std::uint64_t word = a.w[static_cast<std::size_t>(wi)];
        while (word) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            int shift = wi * 64 + bit;
            int wo = shift / 64, bo = shift % 64;
            for (int k = 0; k < 2; ++k) {
                std::uint64_t src = b.w[static_cast<std::size_t>(k)];
                if (!src) continue;
                acc[static_cast<std::size_t>(k + wo)] ^= src << bo;
                if (bo && k + wo + 1 < 4)
                    acc[static_cast<std::size_t>(k + wo + 1)] ^= src >> (64 - bo);
            }
        }
    }
    for (int bit = 2 * ext_degree_ - 2; bit >= ext_degree_; --bit) {
        if (!((acc[static_cast<std::size_t>(bit) / 64] >> (bit % 64)) & 1u)) continue;
        int shift = bit - ext_degree_;
        int wo = shift / 64, bo = shift % 64;
        for (int k = 0; k < 3; ++k) {
            std::uint64_t src = modulus_words_[static_cast<std::size_t>(k)];
            if (!src) continue;
            if (k + wo < 4) acc[static_cast<std::size_t>(k + wo)] ^= src << bo;
            if (bo && k + wo + 1 < 4)
                acc[static_cast<std::size_t>(k + wo + 1)] ^= src >> (64 - bo);
        }
    }
    return FieldElement{{acc[0], acc[1]}};
}

FieldElement FieldContext::inv(const FieldElement& a) const {
    if (a.is_zero()) throw std::domain_error("FieldContext::inv: zero has no inverse");
    // a^(2^m - 2) = product of a^(2^i) for 1 <= i <= m-1.
    FieldElement sq = a;
    FieldElement result = FieldElement::one();
    for (int i = 1; i < ext_degree_; ++i) {
        sq = mul(sq, sq);
        result = mul(result, sq);
    }
    return result;
}

FieldElement FieldContext::pow(const FieldElement& a, long long e) const {
    if (e < 0) throw std::invalid_argument("FieldContext::pow: negative exponent");
    FieldElement result = FieldElement::one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement FieldContext::frobenius(const FieldElement& a, int j) const {
    if (j < 0) throw std::invalid_argument("FieldContext::frobenius: negative iterate");
    FieldElement r = a;
    for (int i = 0; i < j; ++i) r = mul(r, r);
    return r;
}

FieldElement FieldContext::element_from_poly(const BinPoly& p) const {
    BinPoly r = p % modulus_;
    FieldElement e;
    for (int i : r.support()) e.w[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
    return e;
}

BinPoly FieldContext::poly_from_element(const FieldElement& e) const {
    BinPoly p;
    for (int wi = 0; wi < 2; ++wi) {
        std::uint64_t word = e.w[static_cast<std::size_t>(wi)];
        while (word) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            p.set_coeff(wi * 64 + bit, true);
        }
    }
    return p;
}

FieldElement FieldContext::eval_at_alpha_power(const BinPoly& k, long long j) const {
    BinPoly reduced = k.reduced_mod_xl_plus_1(block_length_);
    FieldElement acc = FieldElement::zero();
    long long jj = j % block_length_;
    if (jj < 0) jj += block_length_;
    for (int i : reduced.support())
        acc = add(acc, alpha_pow_[static_cast<std::size_t>((i * jj) % block_length_)]);
    return acc;
}

}  // namespace cslnc
