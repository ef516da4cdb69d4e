#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hgc::workbench {

/// One numeric cell; on failure `value` is empty and `error` says why.
struct Cell {
    std::optional<double> value;
    std::string error;
    bool ok() const { return value.has_value(); }
};

struct BoundRow {
    double n = 0;
    int r = 2;
    Cell max_k_2col;     ///< r = 2 only
    Cell ref_2col;       ///< sqrt(n / ln n)
    Cell ratio_2col;
    Cell max_k_rcol;
    Cell ref_rcol;       ///< (n / ln n)^((r-1)/r)
    Cell ratio_rcol;
    Cell log_D;          ///< natural log of the local-lemma degree
    Cell log_ref_D;      ///< log of (n / ln n)^((r-1)/r) r^n
    Cell ratio_D;        ///< D over its reference, exp of the log difference
};

/// Rows in the order n-major, r-minor. Failing cells are marked, the table completes.
std::vector<BoundRow> bound_table(const std::vector<double>& n_values, const std::vector<int>& r_values);

/// Header plus one line per row. Failed cells read "error: <reason>" (commas removed).
std::string bound_table_csv(const std::vector<BoundRow>& rows);

} // namespace hgc::workbench
