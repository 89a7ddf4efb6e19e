#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cslnc/builder.hpp"
#include "cslnc/circcode.hpp"
#include "cslnc/gfpoly.hpp"
#include "cslnc/io.hpp"
#include "cslnc/simulate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitSimulation = 4;

std::string coset_display(const std::vector<std::vector<int>>& cosets) {
    std::string out;
    for (std::size_t b = 0; b < cosets.size(); ++b) {
        if (b) out += "|";
        for (std::size_t i = 0; i < cosets[b].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(cosets[b][i]);
        }
    }
    return out;
}

int run_analyze(int L, int delta, int receivers) {
    cslnc::FieldContext ctx = cslnc::FieldContext::build(L);
    std::cout << "L=" << L << "\n";
    std::cout << "m_L=" << ctx.m() << "\n";
    std::cout << "phi=" << ctx.phi() << "\n";
    std::cout << "rate=" << ctx.phi() << "/" << L << "\n";
    std::cout << "modulus=" << ctx.modulus().to_string() << "\n";
    std::cout << "cosets=" << coset_display(ctx.cosets()) << "\n";
    if (delta > 0) {
        cslnc::CandidatePool pool = cslnc::enumerate_pool(ctx, delta);
        std::cout << "delta=" << delta << "\n";
        std::cout << "pool_size=" << pool.size() << "\n";
        std::cout << "K_delta=" << pool.distinct_count << "\n";
        if (receivers > 0) {
            cslnc::FeasibilityVerdict v = cslnc::feasibility(ctx, delta, receivers);
            std::cout << "receivers=" << receivers << "\n";
            std::cout << "bound=" << v.bound << "\n";
            std::cout << "feasibility=" << (v.guaranteed ? "guaranteed" : "unguaranteed") << "\n";
        }
    }
    return kExitOk;
}

int run_build(const std::string& net_path, int L, int delta, const std::string& out_path) {
    cslnc::MulticastNetwork net = cslnc::load_network(net_path);
    cslnc::FieldContext ctx = cslnc::FieldContext::build(L);

    cslnc::FeasibilityVerdict verdict =
        cslnc::feasibility(ctx, delta, static_cast<int>(net.receivers().size()));
    std::cout << "feasibility=" << (verdict.guaranteed ? "guaranteed" : "unguaranteed")
              << "\n";

    cslnc::ScalarCode scalar = cslnc::construct(net, ctx, delta);
    cslnc::CircularShiftCode code =
        cslnc::make_solution(scalar, net, ctx, ctx.coprime_residues());

    std::cout << "receivers=" << net.receivers().size() << "\n";
    std::cout << "J=" << code.J() << "\n";
    std::cout << "rate=" << code.J() << "/" << L << "\n";
    cslnc::save_code(out_path, code, net, ctx);
    std::cout << "wrote=" << out_path << "\n";
    return kExitOk;
}

int run_verify(const std::string& net_path, const std::string& code_path) {
    cslnc::MulticastNetwork net = cslnc::load_network(net_path);
    cslnc::LoadedCode loaded = cslnc::instantiate_code(cslnc::load_code_file(code_path), net);
    const cslnc::FieldContext& ctx = loaded.ctx;
    bool all_ok = true;

    // Stored G must match the one mandated by the exponent set, and stay
    // inside GF(2).
    auto [g, gs] = cslnc::source_matrix(loaded.code.j_set, ctx, net.omega());
    bool g_ok = g == loaded.code.G;
    std::cout << "lemma2_bitness=ok g_match=" << (g_ok ? "ok" : "mismatch") << "\n";
    all_ok = all_ok && g_ok;

    cslnc::SolutionSet derived = cslnc::solution_set(loaded.scalar, net, ctx);
    for (int j : loaded.code.j_set)
        if (!derived.contains(j)) {
            std::cout << "j_set_entry=" << j << " status=not_a_solution\n";
            all_ok = false;
        }

    for (int t : net.receivers()) {
        auto [lhs, rhs] =
            cslnc::rank_relation_check(loaded.code, loaded.scalar, net, ctx, t);
        auto [rank, target] = cslnc::solution_rank_check(loaded.code, net, t);
        bool decoder_ok = false;
        int bad_j = -1;
        if (loaded.code.decoders.count(t)) {
            cslnc::BinMatrix product = loaded.code.Gs *
                                       cslnc::receiver_juxtaposition(loaded.code, net, t) *
                                       loaded.code.decoders.at(t);
            decoder_ok = product == cslnc::BinMatrix::identity(net.omega() * loaded.code.J());
        }
        if (rank != target) {
            for (int j : loaded.code.j_set) {
                cslnc::GlobalKernelTable table = cslnc::global_kernels(loaded.scalar, net, ctx, j);
                if (cslnc::receiver_matrix(table, net, ctx, t).rank() != net.omega()) {
                    bad_j = j;
                    break;
                }
            }
        }
        bool ok = lhs == rhs && rank == target && decoder_ok;
        std::cout << "receiver=" << net.node_name(t) << " eq8=" << lhs << "/" << rhs
                  << " rank=" << rank << " target=" << target
                  << " decoder=" << (decoder_ok ? "ok" : "bad");
        if (bad_j >= 0) std::cout << " bad_j=" << bad_j;
        std::cout << " result=" << (ok ? "PASS" : "FAIL") << "\n";
        all_ok = all_ok && ok;
    }
    std::cout << "verify=" << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? kExitOk : 1;
}

int run_simulate(const std::string& net_path, const std::string& code_path, int trials,
                 std::uint64_t seed) {
    cslnc::MulticastNetwork net = cslnc::load_network(net_path);
    cslnc::LoadedCode loaded = cslnc::instantiate_code(cslnc::load_code_file(code_path), net);

    for (int t : net.receivers())
        if (!loaded.code.decoders.count(t))
            throw cslnc::FileFormatError("code file: missing decoder for receiver " +
                                         net.node_name(t));

    std::mt19937_64 rng(seed);
    int ok = 0;
    for (int i = 0; i < trials; ++i) {
        cslnc::SourceMessage msg =
            cslnc::random_message(net.omega(), loaded.code.J(), rng);
        auto units = cslnc::propagate(net, loaded.code,
                                      cslnc::encode_source(msg, loaded.code.Gs, net));
        bool round_trip = true;
        for (int t : net.receivers())
            if (!(cslnc::decode(net, t, units, loaded.code.decoders.at(t)) == msg))
                round_trip = false;
        if (round_trip) ++ok;
    }
    cslnc::ShiftOpStats stats = cslnc::shift_op_count(loaded.code, net);
    std::cout << "trials=" << trials << "\n";
    std::cout << "ok=" << ok << "\n";
    std::cout << "shifts=" << stats.shifts << "\n";
    std::cout << "xor_words=" << stats.xor_words << "\n";
    std::cout << "result=" << (ok == trials ? "PASS" : "FAIL") << "\n";
    return ok == trials ? kExitOk : kExitSimulation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular-shift linear network codes over odd block lengths"};
    app.require_subcommand(1);

    int L = 0, delta = 0, receivers = 0, trials = 1000;
    std::uint64_t seed = 1;
    std::string net_path, code_path, out_path;

    CLI::App* analyze = app.add_subcommand("analyze", "block-length parameters and feasibility");
    analyze->add_option("--L", L, "odd block length")->required();
    analyze->add_option("--delta", delta, "kernel degree bound");
    analyze->add_option("--receivers", receivers, "receiver count for the feasibility verdict");

    CLI::App* build = app.add_subcommand("build", "construct a solution and write a code file");
    build->add_option("--net", net_path, "network JSON file")->required();
    build->add_option("--L", L, "odd block length")->required();
    build->add_option("--delta", delta, "kernel degree bound")->required();
    build->add_option("--out", out_path, "output code file")->required();

    CLI::App* verify = app.add_subcommand("verify", "recheck a code file against its network");
    verify->add_option("--net", net_path, "network JSON file")->required();
    verify->add_option("--code", code_path, "code JSON file")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "round-trip random messages");
    simulate->add_option("--net", net_path, "network JSON file")->required();
    simulate->add_option("--code", code_path, "code JSON file")->required();
    simulate->add_option("--trials", trials, "number of random messages");
    simulate->add_option("--seed", seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(L, delta, receivers);
        if (app.got_subcommand(build)) return run_build(net_path, L, delta, out_path);
        if (app.got_subcommand(verify)) return run_verify(net_path, code_path);
        if (app.got_subcommand(simulate)) return run_simulate(net_path, code_path, trials, seed);
    } catch (const cslnc::SelectionExhausted& e) {
        std::cerr << "error: construction failed: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const cslnc::NetworkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const cslnc::FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
