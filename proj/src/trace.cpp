#include "racsim/trace.hpp"

#include <charconv>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>

namespace racsim {

const char* to_string(TraceFormat f) {
    switch (f) {
        case TraceFormat::text: return "text";
        case TraceFormat::binary: return "bin";
        case TraceFormat::champsim: return "champsim";
    }
    return "?";
}

TraceFormat trace_format_from_string(const std::string& name) {
    if (name == "text") return TraceFormat::text;
    if (name == "bin" || name == "binary") return TraceFormat::binary;
    if (name == "champsim") return TraceFormat::champsim;
    throw ConfigError("unknown trace format '" + name + "' (expected text|bin|champsim)");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_u64(std::string_view token, std::uint64_t& value) {
    int base = 10;
    if (token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
        token.remove_prefix(2);
        base = 16;
    }
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value, base);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::uint64_t load_le64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

void store_le64(unsigned char* p, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

} // namespace

Access parse_text_line(const std::string& line, std::size_t line_no) {
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);

    auto space = body.find_first_of(" \t");
    if (space == std::string_view::npos)
        throw TraceError(line_no, "line " + std::to_string(line_no) +
                                      ": expected 'R|W <address>', got '" + std::string(body) + "'");
    std::string_view op = body.substr(0, space);
    std::string_view rest = trim(body.substr(space + 1));

    Access access;
    if (op == "R") {
        access.kind = AccessKind::load;
    } else if (op == "W") {
        access.kind = AccessKind::store;
    } else {
        throw TraceError(line_no,
                         "line " + std::to_string(line_no) + ": unknown opcode '" + std::string(op) + "'");
    }
    if (rest.find_first_of(" \t") != std::string_view::npos || !parse_u64(rest, access.address))
        throw TraceError(line_no, "line " + std::to_string(line_no) + ": bad address '" +
                                      std::string(rest) + "'");
    return access;
}

TraceStream read_text_trace(std::istream& in) {
    TraceStream stream;
    stream.source = TraceFormat::text;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body(line);
        if (auto hash = body.find('#'); hash != std::string_view::npos)
            body = body.substr(0, hash);
        if (trim(body).empty()) continue;
        stream.accesses.push_back(parse_text_line(line, line_no));
    }
    return stream;
}

void write_text_trace(std::ostream& out, std::span<const Access> accesses) {
    char buf[32];
    for (const Access& a : accesses) {
        std::snprintf(buf, sizeof(buf), "0x%llx",
                      static_cast<unsigned long long>(a.address));
        out << (a.kind == AccessKind::load ? "R " : "W ") << buf << '\n';
    }
}

TraceStream decode_canonical_binary(std::istream& in) {
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (in.gcount() != static_cast<std::streamsize>(magic.size()) || magic != kBinaryMagic)
        throw TraceError(0, "bad magic: not a RACTRC01 stream");

    TraceStream stream;
    stream.source = TraceFormat::binary;
    unsigned char record[9];
    std::size_t index = 0;
    for (;;) {
        in.read(reinterpret_cast<char*>(record), sizeof(record));
        std::streamsize got = in.gcount();
        if (got == 0) break;
        ++index;
        if (got != sizeof(record))
            throw TraceError(index, "record " + std::to_string(index) + ": truncated (" +
                                        std::to_string(got) + " of 9 bytes)");
        Access access;
        if (record[0] == 0x00) {
            access.kind = AccessKind::load;
        } else if (record[0] == 0x01) {
            access.kind = AccessKind::store;
        } else {
            throw TraceError(index, "record " + std::to_string(index) + ": unknown opcode byte " +
                                        std::to_string(record[0]));
        }
        access.address = load_le64(record + 1);
        stream.accesses.push_back(access);
    }
    return stream;
}

void encode_canonical_binary(std::ostream& out, std::span<const Access> accesses) {
    out.write(kBinaryMagic.data(), kBinaryMagic.size());
    unsigned char record[9];
    for (const Access& a : accesses) {
        record[0] = a.kind == AccessKind::load ? 0x00 : 0x01;
        store_le64(record + 1, a.address);
        out.write(reinterpret_cast<const char*>(record), sizeof(record));
    }
}

ChampSimInstr decode_champsim_record(std::span<const unsigned char, kChampSimRecordSize> bytes) {
    ChampSimInstr instr;
    instr.ip = load_le64(bytes.data());
    instr.is_branch = bytes[8];
    instr.branch_taken = bytes[9];
    for (int i = 0; i < 2; ++i) instr.dest_regs[i] = bytes[10 + i];
    for (int i = 0; i < 4; ++i) instr.src_regs[i] = bytes[12 + i];
    for (int i = 0; i < 2; ++i) instr.dest_mem[i] = load_le64(bytes.data() + 16 + 8 * i);
    for (int i = 0; i < 4; ++i) instr.src_mem[i] = load_le64(bytes.data() + 32 + 8 * i);
    return instr;
}

void encode_champsim_record(const ChampSimInstr& instr,
                            std::span<unsigned char, kChampSimRecordSize> bytes) {
    std::memset(bytes.data(), 0, bytes.size());
    store_le64(bytes.data(), instr.ip);
    bytes[8] = instr.is_branch;
    bytes[9] = instr.branch_taken;
    for (int i = 0; i < 2; ++i) bytes[10 + i] = instr.dest_regs[i];
    for (int i = 0; i < 4; ++i) bytes[12 + i] = instr.src_regs[i];
    for (int i = 0; i < 2; ++i) store_le64(bytes.data() + 16 + 8 * i, instr.dest_mem[i]);
    for (int i = 0; i < 4; ++i) store_le64(bytes.data() + 32 + 8 * i, instr.src_mem[i]);
}

std::vector<Access> accesses_from_instr(const ChampSimInstr& instr) {
    std::vector<Access> out;
    for (std::uint64_t addr : instr.src_mem) {
        if (addr != 0) out.push_back({AccessKind::load, addr});
    }
    for (std::uint64_t addr : instr.dest_mem) {
        if (addr != 0) out.push_back({AccessKind::store, addr});
    }
    return out;
}

TraceStream read_champsim_trace(std::istream& in) {
    TraceStream stream;
    stream.source = TraceFormat::champsim;
    std::array<unsigned char, kChampSimRecordSize> record{};
    std::size_t index = 0;
    for (;;) {
        in.read(reinterpret_cast<char*>(record.data()), record.size());
        std::streamsize got = in.gcount();
        if (got == 0) break;
        ++index;
        if (got != static_cast<std::streamsize>(record.size()))
            throw TraceError(index, "record " + std::to_string(index) + ": truncated (" +
                                        std::to_string(got) + " of 64 bytes)");
        ChampSimInstr instr = decode_champsim_record(record);
        for (const Access& a : accesses_from_instr(instr)) stream.accesses.push_back(a);
    }
    return stream;
}

TraceStream read_trace(std::istream& in, TraceFormat format) {
    switch (format) {
        case TraceFormat::text: return read_text_trace(in);
        case TraceFormat::binary: return decode_canonical_binary(in);
        case TraceFormat::champsim: return read_champsim_trace(in);
    }
    throw ConfigError("unhandled trace format");
}

} // namespace racsim
