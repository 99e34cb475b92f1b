#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "detkit/error.hpp"

namespace detkit {

/// One payload in an archive. index must be unique within the archive and
/// the payload shorter than 2^32 bytes.
struct RecordEntry {
    std::uint64_t index = 0;
    std::string source_path;
    std::vector<std::uint8_t> payload;

    bool operator==(const RecordEntry&) const = default;
};

/// The three files of an archive, sharing a stem:
///   .rec  — binary payload stream (layout below)
///   .idx  — text, one "<index>\t<byte offset of record start>\n" per record
///   .lst  — text, one "<index>\t<source_path>\n" per record
///
/// Each .rec record is: magic 0xCE 0xD7 0x00 0x00 (little-endian u32),
/// payload length (little-endian u32), the payload, zero padding to a 4-byte
/// boundary, then CRC-32 of the payload (little-endian u32).
struct ArchiveTriple {
    std::filesystem::path lst_path;
    std::filesystem::path idx_path;
    std::filesystem::path rec_path;
};

inline constexpr std::uint32_t kRecordMagic = 0x0000D7CE;  // bytes CE D7 00 00

ArchiveTriple archive_paths(const std::filesystem::path& stem);

class ArchiveError : public Error {
public:
    enum class Kind {
        empty_archive,
        duplicate_index,
        oversized_payload,
        bad_magic,
        checksum_mismatch,
        truncated_record,
        unknown_index,
        inconsistent_triple,
        io,
    };

    ArchiveError(Kind kind, const std::string& message, std::uint64_t record = 0)
        : Error(message), kind_(kind), record_(record) {}

    Kind kind() const { return kind_; }
    /// Ordinal (or requested index, for unknown_index) of the failing record.
    std::uint64_t record() const { return record_; }

private:
    Kind kind_;
    std::uint64_t record_;
};

/// Writes the three files. Packing the same entries twice produces
/// byte-identical files. Throws ArchiveError on an empty entry list,
/// duplicate indices, oversized payloads, or I/O failure.
ArchiveTriple pack(std::span<const RecordEntry> entries, const std::filesystem::path& out_stem);

/// Payloads in write order. Verifies magic and checksum per record and
/// reports bad_magic / checksum_mismatch / truncated_record with the failing
/// record's ordinal.
std::vector<std::vector<std::uint8_t>> read_sequential(const std::filesystem::path& rec_path);

/// Random access through the .idx offsets; identical bytes to the sequential
/// read of that record.
std::vector<std::uint8_t> read_random(const ArchiveTriple& triple, std::uint64_t index);

/// Joins .lst names with .rec payloads, in archive order.
std::vector<RecordEntry> read_archive(const ArchiveTriple& triple);

}  // namespace detkit
