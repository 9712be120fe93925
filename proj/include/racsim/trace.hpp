#ifndef RACSIM_TRACE_HPP_
#define RACSIM_TRACE_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "racsim/engine.hpp"

namespace racsim {

// Malformed trace content. index is the 1-based line number (text) or record
// number (binary formats) of the offending input.
struct TraceError : std::runtime_error {
    TraceError(std::size_t index, const std::string& what)
        : std::runtime_error(what), index(index) {}
    std::size_t index;
};

enum class TraceFormat : std::uint8_t { text, binary, champsim };

const char* to_string(TraceFormat f);
TraceFormat trace_format_from_string(const std::string& name);

struct TraceStream {
    std::vector<Access> accesses;
    TraceFormat source = TraceFormat::text;
};

// --- canonical text: lines "R <addr>" / "W <addr>", hex (0x...) or decimal ---

// The caller strips blank lines and '#' comments; this rejects anything else.
Access parse_text_line(const std::string& line, std::size_t line_no);

TraceStream read_text_trace(std::istream& in);
void write_text_trace(std::ostream& out, std::span<const Access> accesses);

// --- canonical binary: 8-byte magic, then 9-byte records ---
// record = opcode byte (0x00 load, 0x01 store) + little-endian 64-bit address

inline constexpr std::array<char, 8> kBinaryMagic = {'R', 'A', 'C', 'T', 'R', 'C', '0', '1'};

TraceStream decode_canonical_binary(std::istream& in);
void encode_canonical_binary(std::ostream& out, std::span<const Access> accesses);

// --- ChampSim: headerless stream of 64-byte little-endian records ---

struct ChampSimInstr {
    std::uint64_t ip = 0;
    std::uint8_t is_branch = 0;
    std::uint8_t branch_taken = 0;
    std::array<std::uint8_t, 2> dest_regs{};
    std::array<std::uint8_t, 4> src_regs{};
    std::array<std::uint64_t, 2> dest_mem{};  // zero means no access
    std::array<std::uint64_t, 4> src_mem{};

    bool operator==(const ChampSimInstr&) const = default;
};

inline constexpr std::size_t kChampSimRecordSize = 64;

ChampSimInstr decode_champsim_record(std::span<const unsigned char, kChampSimRecordSize> bytes);
void encode_champsim_record(const ChampSimInstr& instr,
                            std::span<unsigned char, kChampSimRecordSize> bytes);

// One load per nonzero src_mem entry in array order, then one store per
// nonzero dest_mem entry in array order.
std::vector<Access> accesses_from_instr(const ChampSimInstr& instr);

TraceStream read_champsim_trace(std::istream& in);

TraceStream read_trace(std::istream& in, TraceFormat format);

} // namespace racsim

#endif
