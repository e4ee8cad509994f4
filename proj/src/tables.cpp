#include "hcf/tables.hpp"

#include "hcf/format.hpp"

namespace hcf {

const std::vector<TableRow>& table_rows(int table) {
    static const std::vector<TableRow> t1 = {
        {-2, -2, 1, -1, "[0;\\overline{-1+i,2-2i}]"},
        {-2, -1, 0, -2, "[0;\\overline{1-i,-1+3i,-1+i,1-3i}]"},
        {-2, 0, 0, 2, "[0;\\overline{2i,4i}]"},
        {-2, 1, 0, 2, "[0;\\overline{1+i,-1-3i,-1-i,1+3i}]"},
        {-2, 2, 1, 1, "[0;\\overline{-1-i,2+2i}]"},
        {-1, -2, 1, -1, "[0;\\overline{-2+2i,2-2i}]"},
        {-1, -1, 1, -1, "[0;\\overline{-2,2-2i}]"},
        {-1, 1, 1, 1, "[0;\\overline{-2,2+2i}]"},
        {-1, 2, 1, 1, "[0;\\overline{-2-2i,2+2i}]"},
        {0, -1, 1, -1, "[0;\\overline{-2-2i,2-2i}]"},
        {0, 1, 1, 1, "[0;\\overline{-2+2i,2+2i}]"},
        {1, -2, 1, -1, "[0;\\overline{2-2i}]"},
        {1, -1, 1, -1, "[0;\\overline{-2i,2-2i}]"},
        {1, 1, 1, 1, "[0;\\overline{2i,2+2i}]"},
        {1, 2, 1, 1, "[0;\\overline{2+2i}]"},
        {2, -2, 1, -1, "[0;\\overline{1-i,2-2i}]"},
        {2, -1, 2, 0, "[0;\\overline{-1+i,-3+i,1-i,3-i}]"},
        {2, 0, 2, 0, "[0;\\overline{-2,4}]"},
        {2, 1, 2, 0, "[0;\\overline{-1-i,-3-i,1+i,3+i}]"},
        {2, 2, 1, 1, "[0;\\overline{1+i,2+2i}]"},
    };
    static const std::vector<TableRow> t2 = {
        {-3, -3, 0, -2, "[0;\\overline{2,-2,1-i,1-i,-1+i,1-3i}]"},
        {-3, -2, 0, -2, "[0;\\overline{2,-1+i,1-3i}]"},
        {-3, -1, 0, -2, "[0;\\overline{2-2i,-4i}]"},
        {-3, 0, 0, 2, "[0;\\overline{4i}]"},
        {-3, 1, 0, 2, "[0;\\overline{2+2i,4i}]"},
        {-3, 2, 0, 2, "[0;\\overline{2,-1-i,1+3i}]"},
        {-3, 3, 0, 2, "[0;\\overline{2,-2,1+i,1+i,-1-i,1+3i}]"},
        {3, -3, 2, 0, "[0;\\overline{2i,2i,-1+i,1-i,1-i,3-i}]"},
        {3, -2, 2, 0, "[0;\\overline{2i,-1+i,-3+i,-2i,1-i,3-i}]"},
        {3, -1, 2, 0, "[0;\\overline{-2+2i,4}]"},
        {3, 0, 2, 0, "[0;\\overline{-4,4}]"},
        {3, 1, 2, 0, "[0;\\overline{-2-2i,4}]"},
        {3, 2, 2, 0, "[0;\\overline{-2i,-1-i,-3-i,2i,1+i,3+i}]"},
        {3, 3, 2, 0, "[0;\\overline{-2i,-2i,-1-i,1+i,1+i,3+i}]"},
        {-2, -3, 1, -1, "[0;\\overline{2i,-1+i,1-i,-2+2i,-2i,1-i,-1+i,2-2i}]"},
        {-1, -3, 1, -1, "[0;\\overline{2i,2-2i}]"},
        {0, -3, 1, -1, "[0;\\overline{2+2i,2-2i}]"},
        {1, -3, 1, -1, "[0;\\overline{2,2-2i}]"},
        {2, -3, 1, -1, "[0;\\overline{2,-1+i,-1+i,-2+2i,-2,1-i,1-i,2-2i}]"},
        {-2, 3, 1, 1, "[0;\\overline{-2i,-1-i,1+i,-2-2i,2i,1+i,-1-i,2+2i}]"},
        {-1, 3, 1, 1, "[0;\\overline{-2i,2+2i}]"},
        {0, 3, 1, 1, "[0;\\overline{2-2i,2+2i}]"},
        {1, 3, 1, 1, "[0;\\overline{2,2+2i}]"},
        {2, 3, 1, 1, "[0;\\overline{2,-1-i,-1-i,-2-2i,-2,1+i,1+i,2+2i}]"},
    };
    if (table == 1) return t1;
    if (table == 2) return t2;
    throw error("no such table");
}

std::string table_row_label(const TableRow& row) {
    std::string d = format_gaussian_int(GaussianInt(row.m, row.n));
    GaussianInt a0(row.a0_re, row.a0_im);
    std::string fl = format_gaussian_int(a0);
    bool wrap = !(a0.im == 0 && a0.re >= 0) && !(a0.re == 0 && a0.im >= 0);
    return "sqrt(" + d + ")-" + (wrap ? "(" + fl + ")" : fl);
}

std::vector<TableDiff> check_table(int table) {
    std::vector<TableDiff> diffs;
    const auto& rows = table_rows(table);
    for (size_t r = 0; r < rows.size(); ++r) {
        const TableRow& row = rows[r];
        FieldPtr field = QuadraticField::make(row.m, row.n);
        FieldElement root = FieldElement::sqrt_d(field);
        GaussianInt a0 = floor_H(root);
        std::string actual;
        if (!(a0 == GaussianInt(row.a0_re, row.a0_im))) {
            actual = "floor_H = " + format_gaussian_int(a0);
        } else {
            Expansion e = expand(root - a0, Algorithm::H);
            actual = format_expansion_paper(e);
        }
        if (actual != row.expansion)
            diffs.push_back({table, r + 1, table_row_label(row), row.expansion, actual});
    }
    return diffs;
}

} // namespace hcf
