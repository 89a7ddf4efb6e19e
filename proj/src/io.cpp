#include "cslnc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cslnc {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileFormatError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileFormatError("cannot open file for writing: " + path);
    out << contents;
    if (!out) throw FileFormatError("failed to write file: " + path);
}

NetworkDescription parse_network(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("network file is not valid JSON: ") + e.what());
    }
    try {
        NetworkDescription desc;
        desc.nodes = j.at("nodes").get<std::vector<std::string>>();
        desc.source = j.at("source").get<std::string>();
        desc.receivers = j.at("receivers").get<std::vector<std::string>>();
        for (const auto& e : j.at("edges")) {
            EdgeSpec spec;
            spec.id = e.at("id").get<int>();
            spec.tail = e.at("tail").get<std::string>();
            spec.head = e.at("head").get<std::string>();
            desc.edges.push_back(std::move(spec));
        }
        return desc;
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("malformed network file: ") + e.what());
    }
}

MulticastNetwork load_network(const std::string& path) {
    return MulticastNetwork::validate(parse_network(read_file(path)));
}

namespace {

std::string row_string(const BinMatrix& m, int r) {
    std::string s(static_cast<std::size_t>(m.cols()), '0');
    for (int c = 0; c < m.cols(); ++c)
        if (m.get(r, c)) s[static_cast<std::size_t>(c)] = '1';
    return s;
}

BinMatrix matrix_from_rows(const std::vector<std::string>& rows, const char* what) {
    if (rows.empty()) throw FileFormatError(std::string(what) + ": no rows");
    BinMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.front().size())
            throw FileFormatError(std::string(what) + ": ragged rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] == '1')
                m.set(static_cast<int>(r), static_cast<int>(c), true);
            else if (rows[r][c] != '0')
                throw FileFormatError(std::string(what) + ": expected '0'/'1' rows");
        }
    }
    return m;
}

}  // namespace

std::string serialize_code(const CircularShiftCode& ccode, const MulticastNetwork& net,
                           const FieldContext& ctx) {
    json j;
    j["L"] = ccode.L;
    j["delta"] = ccode.delta;
    j["modulus"] = ctx.modulus().to_string();

    json kernels = json::array();
    std::vector<std::pair<int, int>> keys;
    for (const auto& [pair, poly] : ccode.kernel_polys) {
        (void)poly;
        keys.push_back(pair);
    }
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    for (const auto& [d, e] : keys) {
        json entry;
        entry["d"] = d;
        entry["e"] = e;
        entry["poly"] = ccode.kernel_poly(d, e).to_string();
        kernels.push_back(std::move(entry));
    }
    j["kernels"] = std::move(kernels);

    j["J_set"] = ccode.j_set;

    json g_rows = json::array();
    for (int r = 0; r < ccode.G.rows(); ++r) g_rows.push_back(row_string(ccode.G, r));
    j["G"] = std::move(g_rows);

    json decoders = json::object();
    for (const auto& [t, d] : ccode.decoders) {
        json rows = json::array();
        for (int r = 0; r < d.rows(); ++r) rows.push_back(row_string(d, r));
        decoders[net.node_name(t)] = std::move(rows);
    }
    j["decoders"] = std::move(decoders);

    return j.dump(2) + "\n";
}

void save_code(const std::string& path, const CircularShiftCode& ccode,
               const MulticastNetwork& net, const FieldContext& ctx) {
    write_file(path, serialize_code(ccode, net, ctx));
}

CodeFileData parse_code(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("code file is not valid JSON: ") + e.what());
    }
    try {
        CodeFileData data;
        data.L = j.at("L").get<int>();
        data.delta = j.at("delta").get<int>();
        data.modulus = BinPoly::parse(j.at("modulus").get<std::string>());
        for (const auto& k : j.at("kernels"))
            data.kernels.emplace_back(k.at("d").get<int>(), k.at("e").get<int>(),
                                      BinPoly::parse(k.at("poly").get<std::string>()));
        data.j_set = j.at("J_set").get<std::vector<int>>();
        data.g_rows = j.at("G").get<std::vector<std::string>>();
        for (const auto& [name, rows] : j.at("decoders").items())
            data.decoders[name] = rows.get<std::vector<std::string>>();
        return data;
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("malformed code file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FileFormatError(std::string("malformed code file: ") + e.what());
    }
}

CodeFileData load_code_file(const std::string& path) { return parse_code(read_file(path)); }

LoadedCode instantiate_code(const CodeFileData& data, const MulticastNetwork& net) {
    if (data.L < 3 || data.L % 2 == 0) throw FileFormatError("code file: L must be odd and >= 3");

    FieldContext ctx = [&] {
        try {
            return FieldContext::build(data.L, data.modulus);
        } catch (const std::invalid_argument& e) {
            throw FileFormatError(std::string("code file: ") + e.what());
        }
    }();

    ScalarCode scalar;
    scalar.L = data.L;
    scalar.delta = data.delta;
    for (const auto& [d, e, poly] : data.kernels) {
        if (d < 1 || d > net.edge_count() || e < 1 || e > net.edge_count())
            throw FileFormatError("code file: kernel references an unknown edge");
        if (net.edge(d).head != net.edge(e).tail)
            throw FileFormatError("code file: kernel on a non-adjacent pair");
        if (data.delta > 0 && poly.weight() > data.delta)
            throw FileFormatError("code file: kernel weight exceeds delta");
        if (poly.degree() >= data.L)
            throw FileFormatError("code file: kernel degree exceeds L-1");
        scalar.set_kernel(d, e, poly);
    }

    LoadedCode loaded{std::move(ctx), std::move(scalar), {}};
    loaded.code = induce(loaded.scalar, net, loaded.ctx, data.j_set);

    BinMatrix g = matrix_from_rows(data.g_rows, "code file G");
    if (g.rows() != static_cast<int>(data.j_set.size()) || g.cols() != data.L)
        throw FileFormatError("code file: G dimensions must be J x L");
    loaded.code.G = g;
    loaded.code.Gs = kron(BinMatrix::identity(net.omega()), g);

    for (const auto& [name, rows] : data.decoders) {
        int t = [&] {
            try {
                return net.node_index(name);
            } catch (const NetworkError& e) {
                throw FileFormatError(std::string("code file: ") + e.what());
            }
        }();
        BinMatrix d = matrix_from_rows(rows, "code file decoder");
        if (d.rows() != net.omega() * data.L ||
            d.cols() != net.omega() * static_cast<int>(data.j_set.size()))
            throw FileFormatError("code file: decoder dimensions must be omega*L x omega*J");
        loaded.code.decoders[t] = std::move(d);
    }
    return loaded;
}

}  // namespace cslnc
