#pragma once

#include <string>

#include "cslnc/circcode.hpp"
#include "cslnc/netmodel.hpp"
#include "cslnc/scalarcode.hpp"

namespace cslnc {

class FileFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Network file: {"nodes": [...], "source": "...", "receivers": [...],
/// "edges": [{"id": 1, "tail": "...", "head": "..."}]}.
NetworkDescription parse_network(const std::string& json_text);
MulticastNetwork load_network(const std::string& path);

/// Code file: block length, degree, modulus, nonzero kernels, solution
/// exponent set, G rows, and per-receiver decoders. Bit strings are
/// low-degree-first ASCII '0'/'1'.
struct CodeFileData {
    int L = 0;
    int delta = 0;
    BinPoly modulus;
    std::vector<std::tuple<int, int, BinPoly>> kernels;  // (d, e, poly), sorted by (e, d)
    std::vector<int> j_set;
    std::vector<std::string> g_rows;
    std::map<std::string, std::vector<std::string>> decoders;
};

std::string serialize_code(const CircularShiftCode& ccode, const MulticastNetwork& net,
                           const FieldContext& ctx);
void save_code(const std::string& path, const CircularShiftCode& ccode,
               const MulticastNetwork& net, const FieldContext& ctx);

CodeFileData parse_code(const std::string& json_text);
CodeFileData load_code_file(const std::string& path);

/// Reconstructs the working objects from a parsed code file: the field
/// context over the stored modulus, the scalar code, and the circular-
/// shift code carrying the stored G, Gs, and decoders.
struct LoadedCode {
    FieldContext ctx;
    ScalarCode scalar;
    CircularShiftCode code;
};

LoadedCode instantiate_code(const CodeFileData& data, const MulticastNetwork& net);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace cslnc
