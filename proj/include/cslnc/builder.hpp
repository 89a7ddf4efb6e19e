#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cslnc/gfpoly.hpp"
#include "cslnc/netmodel.hpp"
#include "cslnc/scalarcode.hpp"

namespace cslnc {

/// Candidate kernel pool: all polynomials of degree <= L-1 with at most
/// delta nonzero terms, in graded-lexicographic order (weight first, then
/// support), together with their evaluation classes at alpha.
struct CandidatePool {
    int delta = 0;
    std::vector<BinPoly> polys;
    std::vector<FieldElement> values_at_alpha;  // per poly
    std::vector<int> value_class;               // per poly: class index
    std::vector<int> class_representative;      // class -> index of minimal-rep poly
    long long distinct_count = 0;               // K_delta

    std::size_t size() const { return polys.size(); }
};

/// Enumerates the pool; throws std::length_error when sum_{i<=delta}
/// C(L, i) exceeds cap.
CandidatePool enumerate_pool(const FieldContext& ctx, int delta, std::size_t cap = 1u << 20);

/// Sufficiency verdict floor(m_L * K_delta / phi(L)) > |T|. Unguaranteed
/// is a warning only; construction is still attempted.
struct FeasibilityVerdict {
    bool guaranteed = false;
    long long bound = 0;  // floor(m_L * K_delta / phi(L))
};

FeasibilityVerdict feasibility(const FieldContext& ctx, int delta, int num_receivers,
                               std::size_t cap = 1u << 20);

/// Raised when no pool polynomial satisfies the selection constraint for
/// some edge; possible when the feasibility bound is not met.
class SelectionExhausted : public std::runtime_error {
public:
    SelectionExhausted(int edge, int input, std::string details);
    int edge() const { return edge_; }
    int input() const { return input_; }

private:
    int edge_;
    int input_;
};

/// Working state of the flow-path construction, exposed so invariants can
/// be re-verified from scratch after every edge iteration.
struct BuilderState {
    struct ReceiverState {
        PathSet paths;
        std::vector<int> frontier;  // per path: its current edge id; the set of these is I_t
        // frontier edge id -> per coset representative -> omega-dim dual vector
        std::map<int, std::vector<std::vector<FieldElement>>> dual;
    };
    std::map<int, std::vector<BinPoly>> global;  // symbolic f_e(x), reduced mod x^L + 1
    std::map<int, ReceiverState> receivers;      // keyed by receiver node
};

using BuilderObserver = std::function<void(const BuilderState&, int completed_edge)>;

/// Flow-path construction of kernels in the candidate pool such that the
/// evaluated scalar code is a solution at alpha^r for every r coprime to
/// L. Deterministic; path sets default to edge_disjoint_paths output.
ScalarCode construct(const MulticastNetwork& net, const FieldContext& ctx, int delta,
                     const std::vector<PathSet>& paths, const BuilderObserver& observer = {},
                     std::size_t cap = 1u << 20);
ScalarCode construct(const MulticastNetwork& net, const FieldContext& ctx, int delta,
                     const BuilderObserver& observer = {}, std::size_t cap = 1u << 20);

/// Recomputes the rank and duality invariants from scratch; returns an
/// empty list when all hold, otherwise one message per violation.
std::vector<std::string> check_invariants(const BuilderState& state, const MulticastNetwork& net,
                                          const FieldContext& ctx);

}  // namespace cslnc
