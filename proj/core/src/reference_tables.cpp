#include "nht/reference_tables.hpp"

#include "nht/codec.hpp"

namespace nht {

const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = {
        {"Table 1", 10, 7, {2, 1, 2, 5, 3},
         "row 7 prints the unreduced value 8 at g(6); 8 = 1 mod 7",
         {
             {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {6, 6, 6, 6, 6, 6, 6, 6, 6, 6}},
             {{1, 1, 1, 1, 0, 0, 0, 0, 0, 0}, {3, 5, 5, 1, 1, 0, 0, 3, 3, 3}},
             {{0, 1, 1, 1, 1, 0, 0, 0, 0, 0}, {3, 3, 5, 5, 1, 1, 0, 0, 3, 3}},
             {{0, 0, 1, 1, 1, 1, 0, 0, 0, 0}, {3, 3, 3, 5, 5, 1, 1, 0, 0, 3}},
             {{1, 1, 0, 0, 0, 0, 0, 0, 1, 1}, {5, 1, 1, 0, 0, 3, 3, 3, 3, 5}},
             {{1, 0, 0, 1, 0, 0, 1, 1, 0, 0}, {6, 5, 4, 6, 4, 4, 0, 4, 5, 0}},
             {{0, 0, 1, 1, 0, 0, 0, 1, 0, 1}, {2, 2, 2, 3, 6, 5, 8, 2, 0, 1}},
             {{0, 1, 1, 0, 0, 0, 1, 1, 0, 0}, {0, 4, 5, 4, 6, 0, 4, 5, 4, 6}},
         }},
        {"Table 3", 10, 41, {28, 20, 6, 14, 15}, "",
         {
             {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
             {{1, 1, 1, 1, 0, 0, 0, 0, 0, 0}, {7, 2, 2, 29, 29, 20, 20, 26, 26, 7}},
             {{0, 1, 1, 1, 1, 0, 0, 0, 0, 0}, {7, 7, 2, 2, 29, 29, 20, 20, 26, 26}},
             {{0, 0, 1, 1, 1, 1, 0, 0, 0, 0}, {26, 7, 7, 2, 2, 29, 29, 20, 20, 26}},
             {{1, 1, 0, 0, 0, 0, 0, 0, 1, 1}, {2, 29, 29, 20, 20, 26, 26, 7, 7, 2}},
             {{1, 0, 0, 1, 0, 0, 1, 1, 0, 0}, {34, 21, 34, 34, 35, 34, 1, 35, 21, 1}},
             {{0, 0, 1, 1, 0, 0, 0, 1, 0, 1}, {8, 28, 7, 15, 0, 14, 21, 6, 8, 20}},
             {{0, 1, 1, 0, 0, 0, 1, 1, 0, 0}, {1, 34, 21, 35, 34, 1, 34, 21, 35, 34}},
         }},
        {"Table 5", 12, 11, {1, 1, 2, 4, 8, 5}, "",
         {
             {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
              {10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10}},
             {{1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
              {2, 7, 6, 3, 2, 6, 1, 3, 6, 7, 3, 4}},
             {{0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
              {4, 2, 7, 6, 3, 2, 6, 1, 3, 6, 7, 3}},
             {{0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
              {3, 4, 2, 7, 6, 3, 2, 6, 1, 3, 6, 7}},
             {{1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
              {3, 9, 6, 10, 3, 5, 7, 3, 4, 6, 7, 9}},
             {{1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0},
              {5, 4, 3, 2, 6, 7, 9, 8, 9, 10, 10, 10}},
             {{0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 1},
              {7, 1, 4, 5, 1, 8, 1, 4, 0, 2, 5, 1}},
             {{0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0},
              {5, 0, 7, 10, 9, 0, 5, 10, 7, 0, 9, 10}},
         }},
        {"Table 6", 12, 29, {14, 18, 28, 27, 7, 23},
         "key fails the orthogonality conditions as captioned; the matrix "
         "displayed alongside it uses the different ordering 14,28,18,27,23,7, "
         "which also fails, and the rows reproduce only under the caption "
         "ordering. Row 6 prints the unreduced value 29 at g(1). Twelve "
         "reorderings of these six values do pass mod 29, e.g. 7,14,28,27,23,18.",
         {
             {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
              {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
             {{1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
              {3, 26, 8, 15, 1, 28, 5, 4, 26, 15, 17, 2}},
             {{0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
              {2, 3, 26, 8, 15, 1, 28, 5, 4, 26, 15, 17}},
             {{0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
              {17, 2, 3, 26, 8, 15, 1, 28, 5, 4, 26, 15}},
             {{1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
              {15, 21, 28, 6, 4, 16, 15, 13, 2, 12, 26, 21}},
             {{1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0},
              {16, 29, 13, 23, 12, 11, 21, 11, 21, 10, 6, 6}},
             {{0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 1},
              {17, 14, 18, 23, 9, 7, 9, 27, 24, 28, 14, 18}},
             {{0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0},
              {12, 20, 22, 10, 25, 20, 12, 10, 22, 20, 25, 10}},
         }},
    };
    return tables;
}

TableReport reproduce(const ReferenceTable& table) {
    TableReport report;
    report.label = table.label;
    report.n = table.n;
    report.m = table.m;
    report.coeffs = table.coeffs;
    report.note = table.note;
    const Modulus m{table.m};
    report.key_verdict = check_solution(table.coeffs, m);

    // Unchecked matrix path: Table 6's key fails the conditions but its
    // forward products are still well-defined and must be reproducible.
    const NhtMatrix matrix(table.n, m, table.coeffs);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        auto computed = forward(matrix, row.input);
        for (std::size_t j = 0; j < computed.size(); ++j) {
            if (row.printed[j] == computed[j])
                continue;
            CellDiscrepancy d;
            d.row = r + 1;
            d.index = j;
            d.printed = row.printed[j];
            d.computed = computed[j];
            d.reduction_only = row.printed[j] % table.m == computed[j];
            report.discrepancies.push_back(d);
        }
        report.computed.push_back(std::move(computed));
    }
    return report;
}

} // namespace nht
