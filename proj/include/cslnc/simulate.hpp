#pragma once

#include <map>
#include <random>

#include "cslnc/circcode.hpp"
#include "cslnc/linalg.hpp"
#include "cslnc/netmodel.hpp"

namespace cslnc {

/// One L-bit edge unit.
using DataUnit = BitVec;

/// omega source rows of J bits each.
struct SourceMessage {
    int omega = 0;
    int block = 0;  // J
    std::vector<BitVec> rows;

    bool operator==(const SourceMessage&) const = default;
};

SourceMessage random_message(int omega, int block, std::mt19937_64& rng);

/// Source encoding: concatenated rows times Gs, split into L-bit units on
/// Out(s) in edge-id order.
std::map<int, DataUnit> encode_source(const SourceMessage& msg, const BinMatrix& gs,
                                      const MulticastNetwork& net);

/// Propagates edge units in topological order. Each contribution
/// m_d * K_{d,e} is the XOR of at most delta circular shifts of m_d, one
/// per nonzero term of the defining polynomial; no dense products.
std::map<int, DataUnit> propagate(const MulticastNetwork& net, const CircularShiftCode& ccode,
                                  const std::map<int, DataUnit>& source_units);

/// Receiver decoding: concatenated In(t) units times D_t, reshaped to
/// omega rows of J bits.
SourceMessage decode(const MulticastNetwork& net, int receiver,
                     const std::map<int, DataUnit>& units, const BinMatrix& decoder);

/// Shift/XOR work implied by the kernel polynomials.
struct ShiftOpStats {
    struct PerEdge {
        long long shifts = 0;     // rotations by a nonzero offset
        long long xor_words = 0;  // word XORs beyond plain copies
    };
    std::map<int, PerEdge> per_edge;
    long long shifts = 0;
    long long xor_words = 0;
};

ShiftOpStats shift_op_count(const CircularShiftCode& ccode, const MulticastNetwork& net);

}  // namespace cslnc
