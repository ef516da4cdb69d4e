#include "hgc/workbench/bound_table.hpp"

#include "hgc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <sstream>

namespace hgc::workbench {
namespace {

template <class F>
Cell compute(F&& f) {
    try {
        const double v = f();
        if (!std::isfinite(v)) return {std::nullopt, "non-finite result"};
        return {v, {}};
    } catch (const std::exception& e) {
        return {std::nullopt, e.what()};
    }
}

Cell ratio(const Cell& a, const Cell& b) {
    if (!a.ok() || !b.ok()) return {std::nullopt, "operand failed"};
    return compute([&] { return *a.value / *b.value; });
}

std::string format_cell(const Cell& c) {
    if (!c.ok()) {
        std::string msg = c.error;
        std::replace(msg.begin(), msg.end(), ',', ';');
        return "error: " + msg;
    }
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::setprecision(10) << *c.value;
    return out.str();
}

} // namespace

std::vector<BoundRow> bound_table(const std::vector<double>& n_values, const std::vector<int>& r_values) {
    std::vector<BoundRow> rows;
    for (double n : n_values) {
        for (int r : r_values) {
            BoundRow row;
            row.n = n;
            row.r = r;
            const double rr = r;
            const double base = n / std::log(n);
            if (r == 2) {
                row.max_k_2col = compute([&] { return bounds::max_k_2col(n); });
                row.ref_2col = compute([&] { return std::sqrt(base); });
                row.ratio_2col = ratio(row.max_k_2col, row.ref_2col);
            } else {
                row.max_k_2col = row.ref_2col = row.ratio_2col = {std::nullopt, "r != 2"};
            }
            row.max_k_rcol = compute([&] { return bounds::max_k_rcol(n, r); });
            row.ref_rcol = compute([&] { return std::pow(base, (rr - 1.0) / rr); });
            row.ratio_rcol = ratio(row.max_k_rcol, row.ref_rcol);
            row.log_D = compute([&] { return bounds::max_degree_lll(n, r).log_D; });
            row.log_ref_D = compute([&] { return (rr - 1.0) / rr * std::log(base) + n * std::log(rr); });
            if (row.log_D.ok() && row.log_ref_D.ok()) {
                row.ratio_D = compute([&] { return std::exp(*row.log_D.value - *row.log_ref_D.value); });
            } else {
                row.ratio_D = {std::nullopt, "operand failed"};
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << "n,r,max_k_2col,ref_2col,ratio_2col,max_k_rcol,ref_rcol,ratio_rcol,log_D,log_ref_D,ratio_D\n";
    for (const auto& row : rows) {
        out << std::setprecision(17) << row.n << ',' << row.r;
        for (const Cell* c : {&row.max_k_2col, &row.ref_2col, &row.ratio_2col, &row.max_k_rcol, &row.ref_rcol,
                              &row.ratio_rcol, &row.log_D, &row.log_ref_D, &row.ratio_D}) {
            out << ',' << format_cell(*c);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace hgc::workbench
