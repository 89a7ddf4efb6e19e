#pragma once

#include <map>
#include <vector>

#include "cslnc/gfpoly.hpp"
#include "cslnc/linalg.hpp"
#include "cslnc/netmodel.hpp"
#include "cslnc/scalarcode.hpp"

namespace cslnc {

/// Circular-shift code induced from a scalar code: every local kernel is
/// the defining polynomial applied to the cyclic permutation matrix, so it
/// is a sum of at most delta cyclic shifts. The source matrix Gs and the
/// per-receiver decoders turn it into a (J, L) solution.
struct CircularShiftCode {
    int L = 0;
    int delta = 0;
    std::map<std::pair<int, int>, BinPoly> kernel_polys;  // nonzero kernels only
    std::map<std::pair<int, int>, BinMatrix> kernels;     // K_{d,e} circulants
    std::map<int, std::vector<BinPoly>> global_polys;     // symbolic f_e(x)
    std::map<int, BinMatrix> global;                      // F_e, omega*L x L
    std::vector<int> j_set;                               // ascending
    BinMatrix G;                                          // J x L, empty until built
    BinMatrix Gs;                                         // omega*J x omega*L
    std::map<int, BinMatrix> decoders;                    // receiver -> D_t

    int J() const { return static_cast<int>(j_set.size()); }
    double rate() const { return static_cast<double>(J()) / L; }
    const BinPoly& kernel_poly(int d, int e) const;
};

/// Induces kernels and global kernels; j_set defaults to the full solution
/// set of the scalar code, or may be pinned to any doubling-closed subset
/// (the build pipeline pins the coprime residues R).
CircularShiftCode induce(const ScalarCode& code, const MulticastNetwork& net,
                         const FieldContext& ctx);
CircularShiftCode induce(const ScalarCode& code, const MulticastNetwork& net,
                         const FieldContext& ctx, std::vector<int> j_set);

/// G = Vtilde^{-1} Itilde_J V_L^{-1} and Gs = I_omega (x) G. Computed over
/// GF(2^{m_L}); every entry is asserted to be a bit before the downcast,
/// which requires j_set to be closed under doubling mod L.
std::pair<BinMatrix, BinMatrix> source_matrix(const std::vector<int>& j_set,
                                              const FieldContext& ctx, int omega);

/// [F_e]_{e in In(t)} with blocks in edge-id order.
BinMatrix receiver_juxtaposition(const CircularShiftCode& ccode, const MulticastNetwork& net,
                                 int receiver);

/// Rank of [F_e] over GF(2) versus the sum over j of the ranks of
/// [f_e(alpha^j)] over GF(2^{m_L}); the two always agree.
std::pair<int, int> rank_relation_check(const CircularShiftCode& ccode, const ScalarCode& code,
                                        const MulticastNetwork& net, const FieldContext& ctx,
                                        int receiver);

/// Rank of Gs [F_e] against the full-rank target omega*J.
std::pair<int, int> solution_rank_check(const CircularShiftCode& ccode,
                                        const MulticastNetwork& net, int receiver);

/// D_t = right inverse of Gs [F_e]; requires full rank at every receiver.
std::map<int, BinMatrix> decoding_matrices(const CircularShiftCode& ccode,
                                           const MulticastNetwork& net);

/// induce + source_matrix + decoding_matrices in one step.
CircularShiftCode make_solution(const ScalarCode& code, const MulticastNetwork& net,
                                const FieldContext& ctx, std::vector<int> j_set);

}  // namespace cslnc
