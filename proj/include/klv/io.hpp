// Table persistence: a canonical JSON interchange format plus a compact
// CRC-checked binary format for large constant tables.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "klv/twisted.hpp"

namespace klv::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Self-contained snapshot of one polynomial table. The element dictionary
// lists canonical (length, ShortLex) reduced words, so indices are stable
// across runs; entries hold only nonzero polynomials, keys ascending.
struct TableFile {
  static constexpr int kVersion = 1;

  int version = kVersion;
  std::string system;
  std::vector<std::vector<int>> matrix;
  std::vector<int> twist;
  std::string kind;
  std::vector<std::vector<int>> words;

  struct Entry {
    std::vector<int> key;
    // Sorted (v-exponent, coefficient) pairs.
    std::vector<std::pair<int, std::int64_t>> poly;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;

  bool operator==(const TableFile&) const = default;
};

TableFile to_table_file(const KLTable& t);
TableFile to_table_file(const SigmaTable& t, const std::string& kind);
TableFile to_table_file(const ConstantsTable& t);

// Canonical JSON text: fixed key order, two-space indent, trailing newline.
// Reloading and re-serializing is byte-identical.
std::string to_json_text(const TableFile& t);
TableFile from_json_text(const std::string& text);

// Compact binary: magic "KLVT", little-endian fields, length-prefixed
// arrays, trailing CRC-32 of the payload. Throws FormatError on a bad
// magic, a version mismatch, truncation, or a checksum failure.
std::string to_binary(const TableFile& t);
TableFile from_binary(const std::string& bytes);

// File round trip; binary chooses the format.
void cache_store(const std::string& path, const TableFile& t, bool binary);
TableFile cache_load(const std::string& path);

std::uint32_t crc32(const void* data, std::size_t len);

}  // namespace klv::io
