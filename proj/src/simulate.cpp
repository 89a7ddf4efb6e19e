#include "cslnc/simulate.hpp"

#include <stdexcept>

namespace cslnc {

SourceMessage random_message(int omega, int block, std::mt19937_64& rng) {
    SourceMessage msg;
    msg.omega = omega;
    msg.block = block;
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < omega; ++i) {
        BitVec row(block);
        for (int j = 0; j < block; ++j) row.set(j, coin(rng));
        msg.rows.push_back(std::move(row));
    }
    return msg;
}

std::map<int, DataUnit> encode_source(const SourceMessage& msg, const BinMatrix& gs,
                                      const MulticastNetwork& net) {
    int omega = net.omega();
    if (msg.omega != omega || static_cast<int>(msg.rows.size()) != omega)
        throw std::invalid_argument("encode_source: message shape does not match the network");
    if (gs.rows() != omega * msg.block)
        throw std::invalid_argument("encode_source: message width does not match Gs");

    BitVec flat(gs.rows());
    for (int i = 0; i < omega; ++i) {
        if (msg.rows[static_cast<std::size_t>(i)].size() != msg.block)
            throw std::invalid_argument("encode_source: ragged message rows");
        for (int j = 0; j < msg.block; ++j)
            if (msg.rows[static_cast<std::size_t>(i)].get(j)) flat.set(i * msg.block + j, true);
    }
    BitVec encoded = flat * gs;  // length omega * L

    int L = gs.cols() / omega;
    std::map<int, DataUnit> units;
    const auto& src_out = net.out_edges(net.source());
    for (int i = 0; i < omega; ++i) {
        BitVec unit(L);
        for (int c = 0; c < L; ++c)
            if (encoded.get(i * L + c)) unit.set(c, true);
        units[src_out[static_cast<std::size_t>(i)]] = std::move(unit);
    }
    return units;
}

std::map<int, DataUnit> propagate(const MulticastNetwork& net, const CircularShiftCode& ccode,
                                  const std::map<int, DataUnit>& source_units) {
    std::map<int, DataUnit> units = source_units;
    for (int e : net.out_edges(net.source()))
        if (!units.count(e)) throw std::invalid_argument("propagate: missing source unit for edge " +
                                                         std::to_string(e));

    for (int e : net.topo_edges()) {
        if (units.count(e)) continue;
        int v = net.edge(e).tail;
        BitVec acc(ccode.L);
        for (int d : net.in_edges(v)) {
            const BinPoly& k = ccode.kernel_poly(d, e);
            if (k.is_zero()) continue;
            const BitVec& md = units.at(d);
            for (int shift : k.support()) acc ^= md.rotated_right(shift);
        }
        units[e] = std::move(acc);
    }
    return units;
}

SourceMessage decode(const MulticastNetwork& net, int receiver,
                     const std::map<int, DataUnit>& units, const BinMatrix& decoder) {
    int omega = net.omega();
    int L = decoder.rows() / omega;
    if (decoder.rows() != omega * L || decoder.cols() % omega != 0)
        throw std::invalid_argument("decode: decoder shape does not match the network");
    int block = decoder.cols() / omega;

    BitVec flat(decoder.rows());
    int off = 0;
    for (int e : net.in_edges(receiver)) {
        const DataUnit& unit = units.at(e);
        if (unit.size() != L) throw std::invalid_argument("decode: unit length mismatch");
        for (int c = 0; c < L; ++c)
            if (unit.get(c)) flat.set(off + c, true);
        off += L;
    }
    BitVec decoded = flat * decoder;

    SourceMessage msg;
    msg.omega = omega;
    msg.block = block;
    for (int i = 0; i < omega; ++i) {
        BitVec row(block);
        for (int j = 0; j < block; ++j)
            if (decoded.get(i * block + j)) row.set(j, true);
        msg.rows.push_back(std::move(row));
    }
    return msg;
}

ShiftOpStats shift_op_count(const CircularShiftCode& ccode, const MulticastNetwork& net) {
    ShiftOpStats stats;
    int words_per_unit = (ccode.L + 63) / 64;
    for (int e : net.topo_edges()) {
        if (net.edge(e).tail == net.source()) continue;
        ShiftOpStats::PerEdge pe;
        long long terms = 0;
        for (int d : net.in_edges(net.edge(e).tail)) {
            const BinPoly& k = ccode.kernel_poly(d, e);
            for (int shift : k.support()) {
                ++terms;
                if (shift != 0) ++pe.shifts;
            }
        }
        if (terms > 1) pe.xor_words = (terms - 1) * words_per_unit;
        stats.per_edge[e] = pe;
        stats.shifts += pe.shifts;
        stats.xor_words += pe.xor_words;
    }
    return stats;
}

}  // namespace cslnc
