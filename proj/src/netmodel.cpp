#include "cslnc/netmodel.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace cslnc {

int MulticastNetwork::node_index(const std::string& name) const {
    for (std::size_t i = 0; i < node_names_.size(); ++i)
        if (node_names_[i] == name) return static_cast<int>(i);
    throw NetworkError("unknown node name: " + name);
}

namespace {

// Unit-capacity max-flow via augmenting paths. Residual arcs at a node are
// scanned in edge-id order (forward arcs without flow, backward arcs with
// flow), which pins the flow assignment deterministically.
struct FlowResult {
    int value = 0;
    std::vector<char> flow;  // per edge id-1
};

FlowResult max_flow(const MulticastNetwork& net, int target) {
    FlowResult result;
    result.flow.assign(static_cast<std::size_t>(net.edge_count()), 0);
    int source = net.source();

    struct Arc {
        int edge;
        bool forward;
        int to;
    };

    auto arcs_at = [&](int v) {
        std::vector<Arc> arcs;
        for (int id : net.out_edges(v)) arcs.push_back({id, true, net.edge(id).head});
        for (int id : net.in_edges(v)) arcs.push_back({id, false, net.edge(id).tail});
        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.edge < b.edge; });
        return arcs;
    };

    while (true) {
        std::vector<char> visited(static_cast<std::size_t>(net.node_count()), 0);
        std::vector<int> path_edges;
        std::vector<char> path_dirs;

        auto dfs = [&](auto&& self, int v) -> bool {
            if (v == target) return true;
            visited[static_cast<std::size_t>(v)] = 1;
            for (const Arc& a : arcs_at(v)) {
                bool usable = a.forward ? !result.flow[static_cast<std::size_t>(a.edge - 1)]
                                        : result.flow[static_cast<std::size_t>(a.edge - 1)] != 0;
                if (!usable || visited[static_cast<std::size_t>(a.to)]) continue;
                path_edges.push_back(a.edge);
                path_dirs.push_back(a.forward ? 1 : 0);
                if (self(self, a.to)) return true;
                path_edges.pop_back();
                path_dirs.pop_back();
            }
            return false;
        };

        if (!dfs(dfs, source)) break;
        for (std::size_t i = 0; i < path_edges.size(); ++i)
            result.flow[static_cast<std::size_t>(path_edges[i] - 1)] = path_dirs[i];
        ++result.value;
    }
    return result;
}

}  // namespace

MulticastNetwork MulticastNetwork::validate(const NetworkDescription& desc) {
    MulticastNetwork net;

    if (desc.nodes.empty()) throw NetworkError("network has no nodes");
    {
        std::set<std::string> seen;
        for (const auto& n : desc.nodes)
            if (!seen.insert(n).second) throw NetworkError("duplicate node name: " + n);
    }
    net.node_names_ = desc.nodes;

    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < net.node_names_.size(); ++i)
            if (net.node_names_[i] == name) return static_cast<int>(i);
        throw NetworkError("unknown node name: " + name);
    };

    net.source_ = index_of(desc.source);
    if (desc.receivers.empty()) throw NetworkError("network has no receivers");
    {
        std::set<int> seen;
        for (const auto& r : desc.receivers) {
            int idx = index_of(r);
            if (idx == net.source_) throw NetworkError("source cannot be a receiver");
            if (!seen.insert(idx).second) throw NetworkError("duplicate receiver: " + r);
            net.receivers_.push_back(idx);
        }
    }

    int edge_count = static_cast<int>(desc.edges.size());
    if (edge_count == 0) throw NetworkError("network has no edges");
    net.edges_.assign(static_cast<std::size_t>(edge_count), Edge{});
    {
        std::vector<char> seen(static_cast<std::size_t>(edge_count), 0);
        for (const auto& e : desc.edges) {
            if (e.id < 1 || e.id > edge_count || seen[static_cast<std::size_t>(e.id - 1)])
                throw NetworkError("edge ids must be unique and dense from 1");
            seen[static_cast<std::size_t>(e.id - 1)] = 1;
            net.edges_[static_cast<std::size_t>(e.id - 1)] =
                Edge{e.id, index_of(e.tail), index_of(e.head)};
        }
    }

    net.out_.assign(net.node_names_.size(), {});
    net.in_.assign(net.node_names_.size(), {});
    for (const Edge& e : net.edges_) {
        net.out_[static_cast<std::size_t>(e.tail)].push_back(e.id);
        net.in_[static_cast<std::size_t>(e.head)].push_back(e.id);
    }
    for (auto& v : net.out_) std::sort(v.begin(), v.end());
    for (auto& v : net.in_) std::sort(v.begin(), v.end());

    // Acyclicity and the node topological order: Kahn's algorithm taking
    // the smallest ready node index first.
    std::vector<int> topo_index(net.node_names_.size(), -1);
    {
        std::vector<int> indeg(net.node_names_.size(), 0);
        for (const Edge& e : net.edges_) ++indeg[static_cast<std::size_t>(e.head)];
        std::set<int> ready;
        for (int v = 0; v < net.node_count(); ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) ready.insert(v);
        int next = 0;
        while (!ready.empty()) {
            int v = *ready.begin();
            ready.erase(ready.begin());
            topo_index[static_cast<std::size_t>(v)] = next++;
            for (int id : net.out_[static_cast<std::size_t>(v)]) {
                int h = net.edges_[static_cast<std::size_t>(id - 1)].head;
                if (--indeg[static_cast<std::size_t>(h)] == 0) ready.insert(h);
            }
        }
        if (next != net.node_count()) throw NetworkError("network contains a cycle");
    }

    net.omega_ = static_cast<int>(net.out_[static_cast<std::size_t>(net.source_)].size());
    if (net.omega_ < 1) throw NetworkError("source has no outgoing edges");
    for (int t : net.receivers_) {
        int indeg = static_cast<int>(net.in_[static_cast<std::size_t>(t)].size());
        if (indeg != net.omega_)
            throw NetworkError("receiver " + net.node_names_[static_cast<std::size_t>(t)] +
                               " has in-degree " + std::to_string(indeg) + ", expected " +
                               std::to_string(net.omega_));
    }
    for (const Edge& e : net.edges_) {
        if (e.tail != net.source_) continue;
        for (int t : net.receivers_)
            if (e.head == t)
                throw NetworkError("edge " + std::to_string(e.id) +
                                   " leads from the source directly into receiver " +
                                   net.node_names_[static_cast<std::size_t>(t)]);
    }

    // Edge order: Out(s) first by id, then head-node topological order.
    net.topo_edges_ = net.out_[static_cast<std::size_t>(net.source_)];
    {
        std::vector<int> rest;
        for (const Edge& e : net.edges_)
            if (e.tail != net.source_) rest.push_back(e.id);
        std::sort(rest.begin(), rest.end(), [&](int a, int b) {
            int ha = topo_index[static_cast<std::size_t>(net.edges_[static_cast<std::size_t>(a - 1)].head)];
            int hb = topo_index[static_cast<std::size_t>(net.edges_[static_cast<std::size_t>(b - 1)].head)];
            if (ha != hb) return ha < hb;
            return a < b;
        });
        net.topo_edges_.insert(net.topo_edges_.end(), rest.begin(), rest.end());
    }

    for (int t : net.receivers_) {
        FlowResult f = max_flow(net, t);
        if (f.value < net.omega_)
            throw NetworkError("max-flow from source to receiver " +
                               net.node_names_[static_cast<std::size_t>(t)] + " is " +
                               std::to_string(f.value) + ", below " + std::to_string(net.omega_));
    }

    return net;
}

PathSet edge_disjoint_paths(const MulticastNetwork& net, int receiver) {
    FlowResult f = max_flow(net, receiver);
    assert(f.value >= net.omega());

    PathSet out;
    out.receiver = receiver;
    std::vector<char> consumed(static_cast<std::size_t>(net.edge_count()), 0);
    for (int first : net.out_edges(net.source())) {
        if (!f.flow[static_cast<std::size_t>(first - 1)]) continue;
        std::vector<int> path{first};
        consumed[static_cast<std::size_t>(first - 1)] = 1;
        int v = net.edge(first).head;
        while (v != receiver) {
            int next = -1;
            for (int id : net.out_edges(v)) {
                if (f.flow[static_cast<std::size_t>(id - 1)] && !consumed[static_cast<std::size_t>(id - 1)]) {
                    next = id;
                    break;
                }
            }
            assert(next > 0 && "flow conservation must provide an outgoing flow edge");
            path.push_back(next);
            consumed[static_cast<std::size_t>(next - 1)] = 1;
            v = net.edge(next).head;
        }
        out.paths.push_back(std::move(path));
    }
    assert(static_cast<int>(out.paths.size()) == net.omega());
    return out;
}

std::vector<std::pair<int, int>> adjacent_pairs(const MulticastNetwork& net) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < net.node_count(); ++v)
        for (int e : net.out_edges(v))
            for (int d : net.in_edges(v)) pairs.emplace_back(d, e);
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return pairs;
}

}  // namespace cslnc
