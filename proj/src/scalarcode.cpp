#include "cslnc/scalarcode.hpp"

#include <stdexcept>

namespace cslnc {

namespace {
const BinPoly kZeroPoly;
}

const BinPoly& ScalarCode::kernel(int d, int e) const {
    auto it = kernels.find({d, e});
    return it == kernels.end() ? kZeroPoly : it->second;
}

void ScalarCode::set_kernel(int d, int e, BinPoly k) {
    if (k.is_zero())
        kernels.erase({d, e});
    else
        kernels[{d, e}] = std::move(k);
}

GlobalKernelTable global_kernels(const ScalarCode& code, const MulticastNetwork& net,
                                 const FieldContext& ctx, long long j) {
    if (j < 0 || j >= ctx.L()) throw std::invalid_argument("global_kernels: j out of range");
    GlobalKernelTable table;
    table.j = j;
    int omega = net.omega();

    const auto& src_out = net.out_edges(net.source());
    for (int i = 0; i < omega; ++i) {
        std::vector<FieldElement> unit(static_cast<std::size_t>(omega), FieldElement::zero());
        unit[static_cast<std::size_t>(i)] = FieldElement::one();
        table.columns[src_out[static_cast<std::size_t>(i)]] = std::move(unit);
    }

    for (int e : net.topo_edges()) {
        if (table.columns.count(e)) continue;  // Out(s) edges already seeded
        int v = net.edge(e).tail;
        std::vector<FieldElement> acc(static_cast<std::size_t>(omega), FieldElement::zero());
        for (int d : net.in_edges(v)) {
            FieldElement k = ctx.eval_at_alpha_power(code.kernel(d, e), j);
            if (k.is_zero()) continue;
            const auto& fd = table.columns.at(d);
            for (int i = 0; i < omega; ++i)
                acc[static_cast<std::size_t>(i)] =
                    ctx.add(acc[static_cast<std::size_t>(i)], ctx.mul(k, fd[static_cast<std::size_t>(i)]));
        }
        table.columns[e] = std::move(acc);
    }
    return table;
}

std::map<int, std::vector<BinPoly>> global_kernels_symbolic(const ScalarCode& code,
                                                            const MulticastNetwork& net) {
    std::map<int, std::vector<BinPoly>> global;
    int omega = net.omega();
    int L = code.L;

    const auto& src_out = net.out_edges(net.source());
    for (int i = 0; i < omega; ++i) {
        std::vector<BinPoly> unit(static_cast<std::size_t>(omega));
        unit[static_cast<std::size_t>(i)] = BinPoly::one();
        global[src_out[static_cast<std::size_t>(i)]] = std::move(unit);
    }

    for (int e : net.topo_edges()) {
        if (global.count(e)) continue;
        int v = net.edge(e).tail;
        std::vector<BinPoly> acc(static_cast<std::size_t>(omega));
        for (int d : net.in_edges(v)) {
            const BinPoly& k = code.kernel(d, e);
            if (k.is_zero()) continue;
            const auto& fd = global.at(d);
            for (int i = 0; i < omega; ++i)
                acc[static_cast<std::size_t>(i)] =
                    (acc[static_cast<std::size_t>(i)] + k * fd[static_cast<std::size_t>(i)])
                        .reduced_mod_xl_plus_1(L);
        }
        global[e] = std::move(acc);
    }
    return global;
}

FieldMatrix receiver_matrix(const GlobalKernelTable& table, const MulticastNetwork& net,
                            const FieldContext& ctx, int receiver) {
    const auto& in = net.in_edges(receiver);
    FieldMatrix m(ctx, net.omega(), static_cast<int>(in.size()));
    for (std::size_t c = 0; c < in.size(); ++c) {
        const auto& col = table.columns.at(in[c]);
        for (int r = 0; r < net.omega(); ++r)
            m.at(r, static_cast<int>(c)) = col[static_cast<std::size_t>(r)];
    }
    return m;
}

bool is_solution_at(const ScalarCode& code, const MulticastNetwork& net, const FieldContext& ctx,
                    long long j) {
    GlobalKernelTable table = global_kernels(code, net, ctx, j);
    for (int t : net.receivers())
        if (receiver_matrix(table, net, ctx, t).rank() != net.omega()) return false;
    return true;
}

bool SolutionSet::contains(int j) const {
    for (int m : members)
        if (m == j) return true;
    return false;
}

SolutionSet solution_set(const ScalarCode& code, const MulticastNetwork& net,
                         const FieldContext& ctx) {
    SolutionSet out;
    for (const auto& coset : ctx.cosets()) {
        if (!is_solution_at(code, net, ctx, coset.front())) continue;
        out.members.insert(out.members.end(), coset.begin(), coset.end());
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

bool frobenius_shift_consistent(const ScalarCode& code, const MulticastNetwork& net,
                                const FieldContext& ctx, int r, int l) {
    long long shifted = r;
    for (int i = 0; i < l; ++i) shifted = (shifted * 2) % ctx.L();
    GlobalKernelTable base = global_kernels(code, net, ctx, r % ctx.L());
    GlobalKernelTable moved = global_kernels(code, net, ctx, shifted);
    for (int t : net.receivers()) {
        FieldElement det_base = receiver_matrix(base, net, ctx, t).determinant();
        FieldElement det_moved = receiver_matrix(moved, net, ctx, t).determinant();
        if (!(det_moved == ctx.frobenius(det_base, l))) return false;
    }
    return true;
}

}  // namespace cslnc
