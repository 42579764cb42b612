#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nht/conditions.hpp"

namespace nht {

class CatalogParseError : public std::runtime_error {
public:
    CatalogParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// One catalog row. `verified` is never trusted from disk: it is recomputed
// via check_solution whenever an entry is created or loaded.
struct CatalogEntry {
    std::size_t n = 0;
    std::uint64_t m = 0;
    CoeffVector coeffs;
    std::string source; // provenance tag, e.g. "table-2 row 1" or "searched"
    bool verified = false;

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// Ordering key is (n, m, coeffs); the source tag and flag do not participate.
bool entry_less(const CatalogEntry& a, const CatalogEntry& b);

// Line-oriented text format: one entry per line, "n m u0 u1 ... u_{h-1}" in
// decimal with single spaces; '#' starts a comment line; entries are written
// sorted by (n, m, coeffs) with a trailing newline. Parsing is strict.
void save_catalog(std::span<const CatalogEntry> entries, std::ostream& out);
void save_catalog_file(std::span<const CatalogEntry> entries,
                       const std::filesystem::path& path);

std::vector<CatalogEntry> load_catalog(std::istream& in,
                                       const std::string& source_tag = "file");
std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path);

// Set union keyed on (n, m, coeffs); first occurrence wins, output sorted.
std::vector<CatalogEntry> merge_catalogs(std::span<const CatalogEntry> a,
                                         std::span<const CatalogEntry> b);

// Every coefficient set printed in the reference tables and text claims this
// library reproduces, tagged with its origin. Verified flags are computed
// fresh on every call; three of the printed sets fail the conditions.
std::vector<CatalogEntry> builtin_catalog();

} // namespace nht
