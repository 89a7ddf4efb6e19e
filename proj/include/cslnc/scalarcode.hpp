#pragma once

#include <map>
#include <vector>

#include "cslnc/gfpoly.hpp"
#include "cslnc/linalg.hpp"
#include "cslnc/netmodel.hpp"

namespace cslnc {

/// Scalar linear code with polynomial-defined local kernels: adjacent pair
/// (d, e) maps to k_{d,e}(x) over GF(2); unlisted pairs are zero. delta is
/// advisory metadata for hand-built codes (0 = undeclared); the builder
/// enforces it strictly.
struct ScalarCode {
    int L = 0;
    int delta = 0;
    std::map<std::pair<int, int>, BinPoly> kernels;

    const BinPoly& kernel(int d, int e) const;
    void set_kernel(int d, int e, BinPoly k);  // dropping zero entries
};

/// Evaluated global kernels at one exponent j: kernels are evaluated at
/// alpha^j first, then propagated in topological order — never the other
/// way around.
struct GlobalKernelTable {
    long long j = 0;
    std::map<int, std::vector<FieldElement>> columns;  // edge -> omega-dim
};

GlobalKernelTable global_kernels(const ScalarCode& code, const MulticastNetwork& net,
                                 const FieldContext& ctx, long long j);

/// Symbolic global kernels f_e(x), kept reduced mod x^L + 1.
std::map<int, std::vector<BinPoly>> global_kernels_symbolic(const ScalarCode& code,
                                                            const MulticastNetwork& net);

/// [f_e(alpha^j)]_{e in In(t)} with columns in edge-id order.
FieldMatrix receiver_matrix(const GlobalKernelTable& table, const MulticastNetwork& net,
                            const FieldContext& ctx, int receiver);

/// True iff every receiver's juxtaposition has full rank omega at alpha^j.
bool is_solution_at(const ScalarCode& code, const MulticastNetwork& net, const FieldContext& ctx,
                    long long j);

/// Exponents j for which the evaluated code is a solution; closed under
/// doubling mod L, so only one representative per cyclotomic coset is
/// actually checked.
struct SolutionSet {
    std::vector<int> members;  // ascending
    int size() const { return static_cast<int>(members.size()); }
    bool contains(int j) const;
};

SolutionSet solution_set(const ScalarCode& code, const MulticastNetwork& net,
                         const FieldContext& ctx);

/// Consistency of determinants under the Frobenius shift: at every
/// receiver, det at alpha^(r*2^l) equals the 2^l-th power of det at
/// alpha^r. Test-support check.
bool frobenius_shift_consistent(const ScalarCode& code, const MulticastNetwork& net,
                                const FieldContext& ctx, int r, int l);

}  // namespace cslnc
