#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cslnc {

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EdgeSpec {
    int id = 0;
    std::string tail;
    std::string head;
};

/// Raw network description as it appears in a network file.
struct NetworkDescription {
    std::vector<std::string> nodes;
    std::string source;
    std::vector<std::string> receivers;
    std::vector<EdgeSpec> edges;
};

struct Edge {
    int id = 0;    // dense, 1-based
    int tail = 0;  // node indices
    int head = 0;
};

/// Validated single-source multicast network: a DAG (parallel edges
/// allowed) with |Out(s)| = |In(t)| = omega, no edge from s into any
/// receiver, and max-flow >= omega toward every receiver. Immutable after
/// construction.
class MulticastNetwork {
public:
    /// Checks every standing assumption and throws NetworkError naming the
    /// first violated one. Networks that fail the normalization are
    /// rejected, never transformed.
    static MulticastNetwork validate(const NetworkDescription& desc);

    int node_count() const { return static_cast<int>(node_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int source() const { return source_; }
    const std::vector<int>& receivers() const { return receivers_; }
    int omega() const { return omega_; }

    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id - 1)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& out_edges(int node) const { return out_[static_cast<std::size_t>(node)]; }
    const std::vector<int>& in_edges(int node) const { return in_[static_cast<std::size_t>(node)]; }

    /// Edge ids in the pinned topological order: Out(s) first by id, then
    /// ascending topological index of the head node, ties by id.
    const std::vector<int>& topo_edges() const { return topo_edges_; }

    const std::string& node_name(int node) const { return node_names_[static_cast<std::size_t>(node)]; }
    int node_index(const std::string& name) const;

private:
    std::vector<std::string> node_names_;
    int source_ = -1;
    std::vector<int> receivers_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_, in_;  // edge ids, ascending
    std::vector<int> topo_edges_;
    int omega_ = 0;
};

/// omega pairwise edge-disjoint s->t paths, each a sequence of edge ids
/// from Out(s) to In(t).
struct PathSet {
    int receiver = -1;
    std::vector<std::vector<int>> paths;
};

/// Deterministic path extraction: augmenting-path max-flow scanning
/// residual arcs in edge-id order, then walking the flow edges.
PathSet edge_disjoint_paths(const MulticastNetwork& net, int receiver);

/// All adjacent pairs (d, e) with head(d) = tail(e), ordered by (e, d) ids.
std::vector<std::pair<int, int>> adjacent_pairs(const MulticastNetwork& net);

}  // namespace cslnc
