#include "cslnc/builder.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cslnc {

namespace {

// Next k-combination of {0, ..., n-1} in lexicographic order; false when
// exhausted.
bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - k + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

FieldElement dot(const FieldContext& ctx, const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b) {
    FieldElement acc = FieldElement::zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = ctx.add(acc, ctx.mul(a[i], b[i]));
    return acc;
}

}  // namespace

CandidatePool enumerate_pool(const FieldContext& ctx, int delta, std::size_t cap) {
    int L = ctx.L();
    if (delta < 1 || delta > L - 1)
        throw std::invalid_argument("enumerate_pool: delta must lie in [1, L-1]");

    // Pool size sum_{i<=delta} C(L, i), guarded against the cap.
    unsigned long long size = 0;
    {
        unsigned long long binom = 1;
        for (int i = 0; i <= delta; ++i) {
            size += binom;
            if (size > cap) throw std::length_error("enumerate_pool: pool size exceeds cap");
            binom = binom * static_cast<unsigned long long>(L - i) /
                    static_cast<unsigned long long>(i + 1);
        }
    }

    CandidatePool pool;
    pool.delta = delta;
    pool.polys.reserve(size);
    pool.polys.push_back(BinPoly{});
    for (int w = 1; w <= delta; ++w) {
        std::vector<int> idx(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) idx[static_cast<std::size_t>(i)] = i;
        do {
            pool.polys.push_back(BinPoly::from_support(idx));
        } while (next_combination(idx, L));
    }
    assert(pool.polys.size() == size);

    pool.values_at_alpha.reserve(size);
    pool.value_class.assign(size, -1);
    std::unordered_map<FieldElement, int, FieldElementHash> classes;
    for (std::size_t i = 0; i < pool.polys.size(); ++i) {
        FieldElement v = ctx.eval_at_alpha_power(pool.polys[i], 1);
        pool.values_at_alpha.push_back(v);
        auto [it, inserted] = classes.emplace(v, static_cast<int>(pool.class_representative.size()));
        if (inserted) pool.class_representative.push_back(static_cast<int>(i));
        pool.value_class[i] = it->second;
    }
    pool.distinct_count = static_cast<long long>(pool.class_representative.size());
    return pool;
}

FeasibilityVerdict feasibility(const FieldContext& ctx, int delta, int num_receivers,
                               std::size_t cap) {
    CandidatePool pool = enumerate_pool(ctx, delta, cap);
    FeasibilityVerdict v;
    v.bound = static_cast<long long>(ctx.m()) * pool.distinct_count / ctx.phi();
    v.guaranteed = v.bound > num_receivers;
    return v;
}

SelectionExhausted::SelectionExhausted(int edge, int input, std::string details)
    : std::runtime_error(std::move(details)), edge_(edge), input_(input) {}

namespace {

struct Engine {
    const MulticastNetwork& net;
    const FieldContext& ctx;
    const CandidatePool& pool;
    const std::vector<int>& reps;  // coset representatives inside R
    ScalarCode code;
    BuilderState state;

    // Per-pool-poly, per-representative evaluations, built once up front.
    std::vector<std::vector<FieldElement>> pool_eval;
    std::vector<char> pool_nonzero_everywhere;

    Engine(const MulticastNetwork& n, const FieldContext& c, const CandidatePool& p)
        : net(n), ctx(c), pool(p), reps(c.coprime_coset_reps()) {
        pool_eval.resize(pool.size());
        pool_nonzero_everywhere.assign(pool.size(), 1);
        for (std::size_t i = 0; i < pool.size(); ++i) {
            auto& evals = pool_eval[i];
            evals.reserve(reps.size());
            for (int r : reps) {
                evals.push_back(ctx.eval_at_alpha_power(pool.polys[i], r));
                if (evals.back().is_zero()) pool_nonzero_everywhere[i] = 0;
            }
        }
    }

    void init(const std::vector<PathSet>& paths) {
        int omega = net.omega();
        const auto& src_out = net.out_edges(net.source());
        for (int i = 0; i < omega; ++i) {
            std::vector<BinPoly> unit(static_cast<std::size_t>(omega));
            unit[static_cast<std::size_t>(i)] = BinPoly::one();
            state.global[src_out[static_cast<std::size_t>(i)]] = std::move(unit);
        }
        for (const PathSet& ps : paths) {
            BuilderState::ReceiverState rs;
            rs.paths = ps;
            if (static_cast<int>(ps.paths.size()) != omega)
                throw std::invalid_argument("construct: path set must contain omega paths");
            std::set<int> used_edges;
            for (const auto& path : ps.paths) {
                if (path.empty()) throw std::invalid_argument("construct: empty path");
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    if (net.edge(path[i]).head != net.edge(path[i + 1]).tail)
                        throw std::invalid_argument("construct: path edges are not adjacent");
                if (net.edge(path.back()).head != ps.receiver)
                    throw std::invalid_argument("construct: path does not end at the receiver");
                for (int id : path)
                    if (!used_edges.insert(id).second)
                        throw std::invalid_argument("construct: paths are not edge-disjoint");
                rs.frontier.push_back(path.front());
                // The dual of an Out(s) frontier edge is the same unit
                // vector as its global kernel.
                int pos = -1;
                for (int i = 0; i < omega; ++i)
                    if (src_out[static_cast<std::size_t>(i)] == path.front()) pos = i;
                if (pos < 0)
                    throw std::invalid_argument("construct: path does not start in Out(s)");
                std::vector<std::vector<FieldElement>> duals;
                for (std::size_t j = 0; j < reps.size(); ++j) {
                    std::vector<FieldElement> unit(static_cast<std::size_t>(omega),
                                                   FieldElement::zero());
                    unit[static_cast<std::size_t>(pos)] = FieldElement::one();
                    duals.push_back(std::move(unit));
                }
                rs.dual[path.front()] = std::move(duals);
            }
            state.receivers[ps.receiver] = std::move(rs);
        }
    }

    std::vector<FieldElement> eval_global(const std::vector<BinPoly>& f, std::size_t j) const {
        std::vector<FieldElement> out;
        out.reserve(f.size());
        for (const BinPoly& p : f) out.push_back(ctx.eval_at_alpha_power(p, reps[j]));
        return out;
    }

    void run(const BuilderObserver& observer) {
        for (int e : net.topo_edges()) {
            if (net.edge(e).tail == net.source()) continue;
            process_edge(e);
            if (observer) observer(state, e);
        }
    }

    void process_edge(int e) {
        int v = net.edge(e).tail;
        int omega = net.omega();

        // Step 1: receivers routed through (d, e), with the path index so
        // the frontier can be advanced later.
        std::map<int, std::vector<std::pair<int, int>>> routed;  // d -> [(receiver, path idx)]
        for (auto& [t, rs] : state.receivers) {
            for (std::size_t p = 0; p < rs.paths.paths.size(); ++p) {
                const auto& path = rs.paths.paths[p];
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    if (path[i + 1] != e) continue;
                    routed[path[i]].emplace_back(t, static_cast<int>(p));
                    assert(rs.frontier[p] == path[i] && "frontier must sit on the incoming edge");
                }
            }
        }

        // Step 2: relevant inputs in ascending edge-id order.
        std::vector<int> relevant;
        for (int d : net.in_edges(v))
            if (routed.count(d)) relevant.push_back(d);

        if (relevant.empty()) {
            state.global[e] = std::vector<BinPoly>(static_cast<std::size_t>(omega));
            return;
        }

        // Step 3: accumulate f(x), starting from the first relevant input.
        std::vector<BinPoly> f = state.global.at(relevant[0]);
        code.set_kernel(relevant[0], e, BinPoly::one());
        std::vector<std::vector<FieldElement>> f_eval(reps.size());
        for (std::size_t j = 0; j < reps.size(); ++j) f_eval[j] = eval_global(f, j);

        std::set<int> used_classes;
        used_classes.insert(pool.value_class[1]);  // the constant 1 sits at pool index 1

        for (std::size_t i = 1; i < relevant.size(); ++i) {
            int d_i = relevant[i];
            const auto& fd_sym = state.global.at(d_i);
            std::vector<std::vector<FieldElement>> fd_eval(reps.size());
            for (std::size_t j = 0; j < reps.size(); ++j) fd_eval[j] = eval_global(fd_sym, j);

            bool all_nonzero = true;
            for (std::size_t j = 0; j < reps.size() && all_nonzero; ++j)
                for (const auto& [t, p] : routed.at(d_i)) {
                    const auto& w = state.receivers.at(t).dual.at(d_i)[j];
                    if (dot(ctx, f_eval[j], w).is_zero()) {
                        all_nonzero = false;
                        break;
                    }
                }
            if (all_nonzero) continue;  // kernel stays zero, f unchanged

            // Forbidden values per representative: quotients whose inverse
            // a candidate evaluation must avoid.
            std::vector<std::vector<FieldElement>> forbidden(reps.size());
            for (std::size_t j = 0; j < reps.size(); ++j) {
                for (std::size_t ii = 0; ii <= i; ++ii) {
                    int d_prev = relevant[ii];
                    if (!routed.count(d_prev)) continue;
                    for (const auto& [t, p] : routed.at(d_prev)) {
                        const auto& w = state.receivers.at(t).dual.at(d_prev)[j];
                        FieldElement den = dot(ctx, f_eval[j], w);
                        if (ii == i && den.is_zero()) continue;
                        assert(!den.is_zero() && "accumulator invariant violated");
                        FieldElement num = dot(ctx, fd_eval[j], w);
                        forbidden[j].push_back(ctx.mul(num, ctx.inv(den)));
                    }
                }
            }

            int chosen = select_candidate(forbidden, used_classes, e, d_i);
            code.set_kernel(d_i, e, pool.polys[static_cast<std::size_t>(chosen)]);
            used_classes.insert(pool.value_class[static_cast<std::size_t>(chosen)]);
            for (int c = 0; c < omega; ++c)
                f[static_cast<std::size_t>(c)] =
                    (f[static_cast<std::size_t>(c)] +
                     pool.polys[static_cast<std::size_t>(chosen)] * fd_sym[static_cast<std::size_t>(c)])
                        .reduced_mod_xl_plus_1(ctx.L());
            for (std::size_t j = 0; j < reps.size(); ++j) {
                const FieldElement& k = pool_eval[static_cast<std::size_t>(chosen)][j];
                for (int c = 0; c < omega; ++c)
                    f_eval[j][static_cast<std::size_t>(c)] =
                        ctx.add(f_eval[j][static_cast<std::size_t>(c)],
                                ctx.mul(k, fd_eval[j][static_cast<std::size_t>(c)]));
            }
        }

        // Step 4: commit f_e and rewire every routed receiver's frontier
        // and dual vectors.
        state.global[e] = f;
        for (int d : relevant) {
            for (const auto& [t, p] : routed.at(d)) {
                auto& rs = state.receivers.at(t);
                std::vector<std::vector<FieldElement>> w_new(reps.size());
                for (std::size_t j = 0; j < reps.size(); ++j) {
                    const auto& w_old = rs.dual.at(d)[j];
                    FieldElement c = dot(ctx, f_eval[j], w_old);
                    assert(!c.is_zero() && "selection must keep the pairing nonzero");
                    FieldElement c_inv = ctx.inv(c);
                    w_new[j].reserve(w_old.size());
                    for (const auto& x : w_old) w_new[j].push_back(ctx.mul(c_inv, x));
                }
                rs.dual.erase(d);
                rs.frontier[static_cast<std::size_t>(p)] = e;
                for (auto& [other, duals] : rs.dual) {
                    (void)other;
                    for (std::size_t j = 0; j < reps.size(); ++j) {
                        FieldElement c = dot(ctx, f_eval[j], duals[j]);
                        if (c.is_zero()) continue;
                        for (std::size_t x = 0; x < duals[j].size(); ++x)
                            duals[j][x] = ctx.add(duals[j][x], ctx.mul(c, w_new[j][x]));
                    }
                }
                rs.dual[e] = std::move(w_new);
            }
        }
    }

    int select_candidate(const std::vector<std::vector<FieldElement>>& forbidden,
                         const std::set<int>& used_classes, int edge, int input) const {
        // Graded-lex scan preferring evaluation classes not yet assigned on
        // this edge; if that exhausts the pool, rescan without the
        // preference so the counting guarantee stays intact.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t idx = 0; idx < pool.size(); ++idx) {
                if (!pool_nonzero_everywhere[idx]) continue;
                if (pass == 0 && used_classes.count(pool.value_class[idx])) continue;
                bool ok = true;
                for (std::size_t j = 0; j < reps.size() && ok; ++j) {
                    FieldElement inv = ctx.inv(pool_eval[idx][j]);
                    for (const FieldElement& bad : forbidden[j])
                        if (inv == bad) {
                            ok = false;
                            break;
                        }
                }
                if (ok) return static_cast<int>(idx);
            }
        }
        std::ostringstream oss;
        oss << "no degree-" << pool.delta << " kernel satisfies the selection constraint for edge "
            << edge << " (input " << input << "); forbidden inverses per representative:";
        for (std::size_t j = 0; j < reps.size(); ++j) {
            oss << " r=" << reps[j] << ":{";
            for (std::size_t i = 0; i < forbidden[j].size(); ++i)
                oss << (i ? "," : "") << ctx.poly_from_element(forbidden[j][i]).to_string();
            oss << "}";
        }
        throw SelectionExhausted(edge, input, oss.str());
    }
};

}  // namespace

ScalarCode construct(const MulticastNetwork& net, const FieldContext& ctx, int delta,
                     const std::vector<PathSet>& paths, const BuilderObserver& observer,
                     std::size_t cap) {
    if (ctx.L() < 3) throw std::invalid_argument("construct: invalid context");
    if (static_cast<int>(paths.size()) != static_cast<int>(net.receivers().size()))
        throw std::invalid_argument("construct: one path set per receiver required");

    CandidatePool pool = enumerate_pool(ctx, delta, cap);
    Engine engine(net, ctx, pool);
    engine.code.L = ctx.L();
    engine.code.delta = delta;
    engine.init(paths);
    engine.run(observer);
    return std::move(engine.code);
}

ScalarCode construct(const MulticastNetwork& net, const FieldContext& ctx, int delta,
                     const BuilderObserver& observer, std::size_t cap) {
    std::vector<PathSet> paths;
    for (int t : net.receivers()) paths.push_back(edge_disjoint_paths(net, t));
    return construct(net, ctx, delta, paths, observer, cap);
}

std::vector<std::string> check_invariants(const BuilderState& state, const MulticastNetwork& net,
                                          const FieldContext& ctx) {
    std::vector<std::string> violations;
    const auto& reps = ctx.coprime_coset_reps();
    int omega = net.omega();

    for (const auto& [t, rs] : state.receivers) {
        for (std::size_t j = 0; j < reps.size(); ++j) {
            // Rank invariant on the frontier.
            FieldMatrix m(ctx, omega, static_cast<int>(rs.frontier.size()));
            std::map<int, std::vector<FieldElement>> fe;
            for (std::size_t c = 0; c < rs.frontier.size(); ++c) {
                const auto& sym = state.global.at(rs.frontier[c]);
                for (int r = 0; r < omega; ++r)
                    m.at(r, static_cast<int>(c)) =
                        ctx.eval_at_alpha_power(sym[static_cast<std::size_t>(r)], reps[j]);
                fe[rs.frontier[c]] = {};
                for (int r = 0; r < omega; ++r)
                    fe[rs.frontier[c]].push_back(m.at(r, static_cast<int>(c)));
            }
            if (m.rank() != omega)
                violations.push_back("receiver " + net.node_name(t) + ", r=" +
                                     std::to_string(reps[j]) + ": frontier rank below omega");

            // Duality invariant.
            for (int eprime : rs.frontier) {
                const auto& w = rs.dual.at(eprime)[j];
                for (int dprime : rs.frontier) {
                    FieldElement acc = FieldElement::zero();
                    for (int r = 0; r < omega; ++r)
                        acc = ctx.add(acc, ctx.mul(fe.at(dprime)[static_cast<std::size_t>(r)],
                                                   w[static_cast<std::size_t>(r)]));
                    bool want_one = dprime == eprime;
                    bool violated = want_one ? !acc.is_one() : !acc.is_zero();
                    if (violated)
                        violations.push_back("receiver " + net.node_name(t) + ", r=" +
                                             std::to_string(reps[j]) + ": dual pairing of edges " +
                                             std::to_string(dprime) + "/" + std::to_string(eprime) +
                                             " violated");
                }
            }
        }
    }
    return violations;
}

}  // namespace cslnc
