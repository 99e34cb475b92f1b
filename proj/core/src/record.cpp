#include "detkit/record.hpp"

#include <zlib.h>

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace fs = std::filesystem;

namespace detkit {

namespace {

constexpr std::size_t kHeaderBytes = 8;   // magic + length
constexpr std::size_t kChecksumBytes = 4;

std::uint32_t payload_crc(std::span<const std::uint8_t> payload) {
    uLong crc = crc32(0L, Z_NULL, 0);
    if (!payload.empty()) {
        crc = crc32(crc, payload.data(), static_cast<uInt>(payload.size()));
    }
    return static_cast<std::uint32_t>(crc);
}

void put_u32_le(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>((v >> 16) & 0xFF));
    out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

std::uint32_t get_u32_le(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::size_t padding_for(std::size_t payload_size) {
    return (4 - payload_size % 4) % 4;
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ArchiveError(ArchiveError::Kind::io, "cannot open for writing: " + path.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw ArchiveError(ArchiveError::Kind::io, "failed writing: " + path.string());
    }
}

std::vector<std::uint8_t> read_binary(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArchiveError(ArchiveError::Kind::io, "cannot open: " + path.string());
    }
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

// Parses one record at `pos` and appends its payload; `ordinal` is the
// 0-based record number used in error messages.
std::size_t parse_record(std::span<const std::uint8_t> bytes, std::size_t pos,
                         std::uint64_t ordinal, std::vector<std::uint8_t>& payload_out) {
    const std::size_t remaining = bytes.size() - pos;
    if (remaining < kHeaderBytes) {
        throw ArchiveError(ArchiveError::Kind::truncated_record,
                           "truncated record " + std::to_string(ordinal), ordinal);
    }
    const std::uint32_t magic = get_u32_le(bytes.data() + pos);
    if (magic != kRecordMagic) {
        throw ArchiveError(ArchiveError::Kind::bad_magic,
                           "bad magic in record " + std::to_string(ordinal), ordinal);
    }
    const std::uint32_t length = get_u32_le(bytes.data() + pos + 4);
    const std::size_t total =
        kHeaderBytes + static_cast<std::size_t>(length) + padding_for(length) + kChecksumBytes;
    if (remaining < total) {
        throw ArchiveError(ArchiveError::Kind::truncated_record,
                           "truncated record " + std::to_string(ordinal), ordinal);
    }
    const std::span<const std::uint8_t> payload = bytes.subspan(pos + kHeaderBytes, length);
    const std::uint32_t stored_crc =
        get_u32_le(bytes.data() + pos + total - kChecksumBytes);
    if (stored_crc != payload_crc(payload)) {
        throw ArchiveError(ArchiveError::Kind::checksum_mismatch,
                           "checksum mismatch in record " + std::to_string(ordinal), ordinal);
    }
    payload_out.assign(payload.begin(), payload.end());
    return total;
}

std::vector<std::pair<std::uint64_t, std::string>> read_tsv(const fs::path& path,
                                                            const char* what) {
    const std::vector<std::uint8_t> bytes = read_binary(path);
    const std::string text(bytes.begin(), bytes.end());
    std::vector<std::pair<std::uint64_t, std::string>> rows;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string_view line(text.data() + start, end - start);
        ++line_no;
        if (!line.empty()) {
            const std::size_t tab = line.find('\t');
            std::uint64_t index = 0;
            const char* first = line.data();
            const char* last = line.data() + (tab == std::string_view::npos ? line.size() : tab);
            const auto [ptr, ec] = std::from_chars(first, last, index);
            if (tab == std::string_view::npos || ec != std::errc{} || ptr != last) {
                throw ArchiveError(ArchiveError::Kind::io,
                                   std::string("malformed ") + what + " line " +
                                       std::to_string(line_no) + " in " + path.string());
            }
            rows.emplace_back(index, std::string(line.substr(tab + 1)));
        }
        start = end + 1;
    }
    return rows;
}

}  // namespace

ArchiveTriple archive_paths(const fs::path& stem) {
    ArchiveTriple t;
    t.lst_path = stem;
    t.lst_path += ".lst";
    t.idx_path = stem;
    t.idx_path += ".idx";
    t.rec_path = stem;
    t.rec_path += ".rec";
    return t;
}

ArchiveTriple pack(std::span<const RecordEntry> entries, const fs::path& out_stem) {
    if (entries.empty()) {
        throw ArchiveError(ArchiveError::Kind::empty_archive, "empty archive");
    }
    std::unordered_set<std::uint64_t> seen;
    for (const RecordEntry& e : entries) {
        if (!seen.insert(e.index).second) {
            throw ArchiveError(ArchiveError::Kind::duplicate_index,
                               "duplicate index " + std::to_string(e.index), e.index);
        }
        if (e.payload.size() >= (1ULL << 32)) {
            throw ArchiveError(ArchiveError::Kind::oversized_payload,
                               "payload of index " + std::to_string(e.index) + " exceeds 2^32-1",
                               e.index);
        }
    }

    std::string rec;
    std::string idx;
    std::string lst;
    for (const RecordEntry& e : entries) {
        idx += std::to_string(e.index);
        idx += '\t';
        idx += std::to_string(rec.size());
        idx += '\n';
        lst += std::to_string(e.index);
        lst += '\t';
        lst += e.source_path;
        lst += '\n';

        put_u32_le(rec, kRecordMagic);
        put_u32_le(rec, static_cast<std::uint32_t>(e.payload.size()));
        if (!e.payload.empty()) {
            rec.append(reinterpret_cast<const char*>(e.payload.data()), e.payload.size());
        }
        rec.append(padding_for(e.payload.size()), '\0');
        put_u32_le(rec, payload_crc(e.payload));
    }

    const ArchiveTriple triple = archive_paths(out_stem);
    write_text_file(triple.rec_path, rec);
    write_text_file(triple.idx_path, idx);
    write_text_file(triple.lst_path, lst);
    return triple;
}

std::vector<std::vector<std::uint8_t>> read_sequential(const fs::path& rec_path) {
    const std::vector<std::uint8_t> bytes = read_binary(rec_path);
    std::vector<std::vector<std::uint8_t>> payloads;
    std::size_t pos = 0;
    while (pos < bytes.size() || payloads.empty()) {
        std::vector<std::uint8_t> payload;
        pos += parse_record(bytes, pos, payloads.size(), payload);
        payloads.push_back(std::move(payload));
    }
    return payloads;
}

std::vector<std::uint8_t> read_random(const ArchiveTriple& triple, std::uint64_t index) {
    const auto rows = read_tsv(triple.idx_path, ".idx");
    std::uint64_t prev_offset = 0;
    bool first = true;
    const std::pair<std::uint64_t, std::string>* found = nullptr;
    std::uint64_t ordinal = 0;
    std::uint64_t found_ordinal = 0;
    for (const auto& row : rows) {
        std::uint64_t offset = 0;
        const auto [ptr, ec] =
            std::from_chars(row.second.data(), row.second.data() + row.second.size(), offset);
        if (ec != std::errc{} || ptr != row.second.data() + row.second.size()) {
            throw ArchiveError(ArchiveError::Kind::io,
                               "malformed offset in " + triple.idx_path.string());
        }
        if (!first && offset <= prev_offset) {
            throw ArchiveError(ArchiveError::Kind::inconsistent_triple,
                               ".idx offsets are not strictly increasing");
        }
        if (row.first == index) {
            found = &row;
            found_ordinal = ordinal;
        }
        prev_offset = offset;
        first = false;
        ++ordinal;
    }
    if (!found) {
        throw ArchiveError(ArchiveError::Kind::unknown_index,
                           "unknown index " + std::to_string(index), index);
    }
    std::uint64_t offset = 0;
    std::from_chars(found->second.data(), found->second.data() + found->second.size(), offset);

    const std::vector<std::uint8_t> bytes = read_binary(triple.rec_path);
    if (offset >= bytes.size()) {
        throw ArchiveError(ArchiveError::Kind::truncated_record,
                           "truncated record " + std::to_string(found_ordinal), found_ordinal);
    }
    std::vector<std::uint8_t> payload;
    parse_record(bytes, static_cast<std::size_t>(offset), found_ordinal, payload);
    return payload;
}

std::vector<RecordEntry> read_archive(const ArchiveTriple& triple) {
    const auto lst = read_tsv(triple.lst_path, ".lst");
    auto payloads = read_sequential(triple.rec_path);
    if (lst.size() != payloads.size()) {
        throw ArchiveError(ArchiveError::Kind::inconsistent_triple,
                           ".lst has " + std::to_string(lst.size()) + " rows but .rec has " +
                               std::to_string(payloads.size()) + " records");
    }
    std::vector<RecordEntry> entries;
    entries.reserve(lst.size());
    for (std::size_t i = 0; i < lst.size(); ++i) {
        entries.push_back({lst[i].first, lst[i].second, std::move(payloads[i])});
    }
    return entries;
}

}  // namespace detkit
