#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nht/conditions.hpp"

namespace nht {

// One published transform row: an input block and the output block as it
// appears in print. Printed values may exceed m (unreduced print errata).
struct ReferenceRow {
    std::vector<Residue> input;
    std::vector<std::uint64_t> printed;
};

// A published example table: a key and eight input/output rows.
struct ReferenceTable {
    std::string label;
    std::size_t n = 0;
    std::uint64_t m = 0;
    CoeffVector coeffs;
    std::string note; // known quirks of this table, empty if none
    std::vector<ReferenceRow> rows;
};

// The four bundled transform tables (mod 7, 41, 11 and 29).
const std::vector<ReferenceTable>& reference_tables();

struct CellDiscrepancy {
    std::size_t row = 0;   // 1-based, as labelled in print
    std::size_t index = 0; // position within the output block
    std::uint64_t printed = 0;
    Residue computed = 0;
    bool reduction_only = false; // printed == computed mod m (unreduced print)
};

// Result of recomputing one table with the transform.
struct TableReport {
    std::string label;
    std::size_t n = 0;
    std::uint64_t m = 0;
    CoeffVector coeffs;
    std::string note;
    Verdict key_verdict;
    std::vector<std::vector<Residue>> computed; // one output block per row
    std::vector<CellDiscrepancy> discrepancies;

    [[nodiscard]] bool clean() const { return discrepancies.empty(); }
};

TableReport reproduce(const ReferenceTable& table);

} // namespace nht
