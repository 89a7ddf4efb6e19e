#include "cslnc/circcode.hpp"

#include <algorithm>
#include <stdexcept>

namespace cslnc {

namespace {
const BinPoly kZeroPoly;

bool doubling_closed(const std::vector<int>& j_set, int L) {
    for (int j : j_set) {
        int dbl = (2 * j) % L;
        if (std::find(j_set.begin(), j_set.end(), dbl) == j_set.end()) return false;
    }
    return true;
}
}  // namespace

const BinPoly& CircularShiftCode::kernel_poly(int d, int e) const {
    auto it = kernel_polys.find({d, e});
    return it == kernel_polys.end() ? kZeroPoly : it->second;
}

CircularShiftCode induce(const ScalarCode& code, const MulticastNetwork& net,
                         const FieldContext& ctx) {
    return induce(code, net, ctx, solution_set(code, net, ctx).members);
}

CircularShiftCode induce(const ScalarCode& code, const MulticastNetwork& net,
                         const FieldContext& ctx, std::vector<int> j_set) {
    std::sort(j_set.begin(), j_set.end());
    CircularShiftCode out;
    out.L = ctx.L();
    out.delta = code.delta;
    out.j_set = std::move(j_set);

    for (const auto& [pair, poly] : code.kernels) {
        if (poly.is_zero()) continue;
        out.kernel_polys[pair] = poly.reduced_mod_xl_plus_1(ctx.L());
        out.kernels[pair] = circulant_of_poly(poly, ctx.L());
    }

    out.global_polys = global_kernels_symbolic(code, net);
    for (const auto& [e, components] : out.global_polys) {
        std::vector<BinMatrix> blocks;
        for (const BinPoly& p : components) blocks.push_back(circulant_of_poly(p, ctx.L()));
        out.global[e] = vstack(blocks);
    }
    return out;
}

std::pair<BinMatrix, BinMatrix> source_matrix(const std::vector<int>& j_set,
                                              const FieldContext& ctx, int omega) {
    if (j_set.empty()) throw std::invalid_argument("source_matrix: empty exponent set");
    if (!doubling_closed(j_set, ctx.L()))
        throw std::invalid_argument("source_matrix: exponent set not closed under doubling mod L");

    std::vector<int> sorted = j_set;
    std::sort(sorted.begin(), sorted.end());
    int J = static_cast<int>(sorted.size());
    int L = ctx.L();

    // Vtilde: rows indexed by j in ascending order, columns 0..J-1 of V_L.
    FieldMatrix vtilde(ctx, J, J);
    for (int r = 0; r < J; ++r)
        for (int c = 0; c < J; ++c)
            vtilde.at(r, c) = ctx.alpha_power(static_cast<long long>(sorted[static_cast<std::size_t>(r)]) * c);

    // Itilde_J V_L^{-1}: the selected rows of the inverse Vandermonde.
    FieldMatrix selected(ctx, J, L);
    for (int r = 0; r < J; ++r)
        for (int c = 0; c < L; ++c)
            selected.at(r, c) =
                ctx.alpha_power(-static_cast<long long>(sorted[static_cast<std::size_t>(r)]) * c);

    FieldMatrix g_field = vtilde.inverse() * selected;

    BinMatrix g(J, L);
    for (int r = 0; r < J; ++r)
        for (int c = 0; c < L; ++c) {
            const FieldElement& v = g_field.at(r, c);
            if (v.is_one())
                g.set(r, c, true);
            else if (!v.is_zero())
                throw std::logic_error("source_matrix: entry outside GF(2)");
        }
    return {g, kron(BinMatrix::identity(omega), g)};
}

BinMatrix receiver_juxtaposition(const CircularShiftCode& ccode, const MulticastNetwork& net,
                                 int receiver) {
    std::vector<BinMatrix> blocks;
    for (int e : net.in_edges(receiver)) blocks.push_back(ccode.global.at(e));
    return hstack(blocks);
}

std::pair<int, int> rank_relation_check(const CircularShiftCode& ccode, const ScalarCode& code,
                                        const MulticastNetwork& net, const FieldContext& ctx,
                                        int receiver) {
    int lhs = receiver_juxtaposition(ccode, net, receiver).rank();
    int rhs = 0;
    for (int j = 0; j < ctx.L(); ++j) {
        GlobalKernelTable table = global_kernels(code, net, ctx, j);
        rhs += receiver_matrix(table, net, ctx, receiver).rank();
    }
    return {lhs, rhs};
}

std::pair<int, int> solution_rank_check(const CircularShiftCode& ccode,
                                        const MulticastNetwork& net, int receiver) {
    if (ccode.Gs.rows() == 0) throw std::logic_error("solution_rank_check: source matrix not built");
    BinMatrix product = ccode.Gs * receiver_juxtaposition(ccode, net, receiver);
    return {product.rank(), net.omega() * ccode.J()};
}

std::map<int, BinMatrix> decoding_matrices(const CircularShiftCode& ccode,
                                           const MulticastNetwork& net) {
    std::map<int, BinMatrix> out;
    for (int t : net.receivers())
        out[t] = right_inverse(ccode.Gs * receiver_juxtaposition(ccode, net, t));
    return out;
}

CircularShiftCode make_solution(const ScalarCode& code, const MulticastNetwork& net,
                                const FieldContext& ctx, std::vector<int> j_set) {
    CircularShiftCode ccode = induce(code, net, ctx, std::move(j_set));
    auto [g, gs] = source_matrix(ccode.j_set, ctx, net.omega());
    ccode.G = g;
    ccode.Gs = gs;
    ccode.decoders = decoding_matrices(ccode, net);
    return ccode;
}

}  // namespace cslnc
