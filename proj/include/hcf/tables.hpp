#pragma once

#include "hcf/classify.hpp"

#include <string>
#include <vector>

namespace hcf {

// Golden corpus: the H-expansions of sqrt(m+ni) - floor_H(sqrt(m+ni)) for
// |m|,|n| <= 2 (table 1) and for max(|m|,|n|) = 3 (table 2).
struct TableRow {
    int m, n;
    int a0_re, a0_im; // floor_H(sqrt(m+ni))
    const char* expansion;
};

const std::vector<TableRow>& table_rows(int table); // 1 or 2

struct TableDiff {
    int table;
    size_t row;
    std::string label;
    std::string expected;
    std::string actual;
};

// Recomputes every row; returns the mismatches (empty = bit-exact match).
std::vector<TableDiff> check_table(int table);

std::string table_row_label(const TableRow& row);

} // namespace hcf
