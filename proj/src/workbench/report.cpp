#include "hgc/workbench/report.hpp"

#include "hgc/errors.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace hgc::workbench {
namespace {

struct CountRef {
    const char* name;
    std::uint64_t MonteCarloReport::*member;
};

const std::vector<CountRef>& count_fields() {
    static const std::vector<CountRef> fields = {
        {"edge_count", &MonteCarloReport::edge_count},
        {"conflicting_pairs_total", &MonteCarloReport::conflicting_pairs_total},
        {"trials_with_conflicting_pair", &MonteCarloReport::trials_with_conflicting_pair},
        {"conflicting_chains_total", &MonteCarloReport::conflicting_chains_total},
        {"trials_with_conflicting_chain", &MonteCarloReport::trials_with_conflicting_chain},
        {"chain_overflow_trials", &MonteCarloReport::chain_overflow_trials},
        {"short_edges_total", &MonteCarloReport::short_edges_total},
        {"trials_with_short_edge", &MonteCarloReport::trials_with_short_edge},
        {"forced_vertices_total", &MonteCarloReport::forced_vertices_total},
        {"invariant_violations", &MonteCarloReport::invariant_violations},
    };
    return fields;
}

std::string format_double(double x) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::setprecision(17) << x;
    return out.str();
}

double parse_double(const std::string& s) {
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double x = 0;
    in >> x;
    if (in.fail()) throw parse_error("bad number '" + s + "' in report", 0);
    return x;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

} // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    // clamp so that the interval always contains the point estimate
    return {std::min(phat, std::max(0.0, centre - half)), std::max(phat, std::min(1.0, centre + half))};
}

double MonteCarloReport::mean_conflicting_pairs() const {
    return success.trials ? static_cast<double>(conflicting_pairs_total) / static_cast<double>(success.trials) : 0.0;
}

double MonteCarloReport::mean_conflicting_chains() const {
    return success.trials ? static_cast<double>(conflicting_chains_total) / static_cast<double>(success.trials) : 0.0;
}

double MonteCarloReport::mean_short_edges() const {
    return success.trials ? static_cast<double>(short_edges_total) / static_cast<double>(success.trials) : 0.0;
}

double MonteCarloReport::short_edge_frequency() const {
    const double denom = static_cast<double>(success.trials) * static_cast<double>(edge_count);
    return denom > 0 ? static_cast<double>(short_edges_total) / denom : 0.0;
}

nlohmann::json to_json(const MonteCarloReport& report) {
    nlohmann::json j;
    j["r"] = report.r;
    j["p"] = report.p;
    j["trials"] = report.success.trials;
    j["successes"] = report.success.successes;
    j["estimate"] = report.success.estimate();
    const auto w95 = report.success.wilson95();
    const auto w99 = report.success.wilson99();
    j["wilson95"] = {w95.lo, w95.hi};
    j["wilson99"] = {w99.lo, w99.hi};
    j["chains_counted"] = report.chains_counted;
    for (const auto& f : count_fields()) j[f.name] = report.*(f.member);
    j["pairs_by_interval"] = {{"B", report.pairs_by_interval.b},
                              {"P", report.pairs_by_interval.p},
                              {"R", report.pairs_by_interval.r}};
    j["trials_with_pair_in"] = {{"B", report.trials_with_pair_in.b},
                                {"P", report.trials_with_pair_in.p},
                                {"R", report.trials_with_pair_in.r}};
    j["mean_conflicting_pairs"] = report.mean_conflicting_pairs();
    j["mean_conflicting_chains"] = report.mean_conflicting_chains();
    j["mean_short_edges"] = report.mean_short_edges();
    j["short_edge_frequency"] = report.short_edge_frequency();
    return j;
}

MonteCarloReport report_from_json(const nlohmann::json& j) {
    MonteCarloReport report;
    report.r = j.at("r").get<int>();
    report.p = j.at("p").get<double>();
    report.success.trials = j.at("trials").get<std::uint64_t>();
    report.success.successes = j.at("successes").get<std::uint64_t>();
    report.chains_counted = j.at("chains_counted").get<bool>();
    for (const auto& f : count_fields()) report.*(f.member) = j.at(f.name).get<std::uint64_t>();
    const auto& by = j.at("pairs_by_interval");
    report.pairs_by_interval = {by.at("B").get<std::uint64_t>(), by.at("P").get<std::uint64_t>(),
                                by.at("R").get<std::uint64_t>()};
    const auto& tw = j.at("trials_with_pair_in");
    report.trials_with_pair_in = {tw.at("B").get<std::uint64_t>(), tw.at("P").get<std::uint64_t>(),
                                  tw.at("R").get<std::uint64_t>()};
    return report;
}

std::string report_csv(const MonteCarloReport& report) {
    std::vector<std::pair<std::string, std::string>> cols = {
        {"r", std::to_string(report.r)},
        {"p", format_double(report.p)},
        {"trials", std::to_string(report.success.trials)},
        {"successes", std::to_string(report.success.successes)},
        {"estimate", format_double(report.success.estimate())},
        {"wilson95_lo", format_double(report.success.wilson95().lo)},
        {"wilson95_hi", format_double(report.success.wilson95().hi)},
        {"wilson99_lo", format_double(report.success.wilson99().lo)},
        {"wilson99_hi", format_double(report.success.wilson99().hi)},
        {"chains_counted", report.chains_counted ? "1" : "0"},
    };
    for (const auto& f : count_fields()) cols.emplace_back(f.name, std::to_string(report.*(f.member)));
    cols.emplace_back("pairs_B", std::to_string(report.pairs_by_interval.b));
    cols.emplace_back("pairs_P", std::to_string(report.pairs_by_interval.p));
    cols.emplace_back("pairs_R", std::to_string(report.pairs_by_interval.r));
    cols.emplace_back("trials_pair_in_B", std::to_string(report.trials_with_pair_in.b));
    cols.emplace_back("trials_pair_in_P", std::to_string(report.trials_with_pair_in.p));
    cols.emplace_back("trials_pair_in_R", std::to_string(report.trials_with_pair_in.r));
    cols.emplace_back("mean_conflicting_pairs", format_double(report.mean_conflicting_pairs()));
    cols.emplace_back("mean_short_edges", format_double(report.mean_short_edges()));

    std::string header;
    std::string row;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) {
            header += ',';
            row += ',';
        }
        header += cols[i].first;
        row += cols[i].second;
    }
    return header + "\n" + row + "\n";
}

MonteCarloReport report_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string header_line;
    std::string row_line;
    if (!std::getline(in, header_line) || !std::getline(in, row_line)) throw parse_error("report CSV needs two lines", 0);
    const auto header = split(header_line, ',');
    const auto row = split(row_line, ',');
    if (header.size() != row.size()) throw parse_error("report CSV header/row length mismatch", 2);
    auto get = [&](const std::string& name) -> const std::string& {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return row[i];
        }
        throw parse_error("report CSV lacks column " + name, 1);
    };
    auto get_u = [&](const std::string& name) { return static_cast<std::uint64_t>(std::stoull(get(name))); };

    MonteCarloReport report;
    report.r = std::stoi(get("r"));
    report.p = parse_double(get("p"));
    report.success.trials = get_u("trials");
    report.success.successes = get_u("successes");
    report.chains_counted = get("chains_counted") == "1";
    for (const auto& f : count_fields()) report.*(f.member) = get_u(f.name);
    report.pairs_by_interval = {get_u("pairs_B"), get_u("pairs_P"), get_u("pairs_R")};
    report.trials_with_pair_in = {get_u("trials_pair_in_B"), get_u("trials_pair_in_P"), get_u("trials_pair_in_R")};
    return report;
}

std::string svg_plot(const std::vector<PlotPoint>& points, const std::string& title, const std::string& x_label,
                     const std::string& y_label) {
    constexpr double width = 640;
    constexpr double height = 400;
    constexpr double margin = 50;
    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    if (!points.empty()) {
        x_min = x_max = points.front().x;
        for (const auto& pt : points) {
            x_min = std::min(x_min, pt.x);
            x_max = std::max(x_max, pt.x);
            y_min = std::min({y_min, pt.y, pt.lo});
            y_max = std::max({y_max, pt.y, pt.hi});
        }
        if (x_max == x_min) x_max = x_min + 1;
    }
    auto sx = [&](double x) { return margin + (x - x_min) / (x_max - x_min) * (width - 2 * margin); };
    auto sy = [&](double y) { return height - margin - (y - y_min) / (y_max - y_min) * (height - 2 * margin); };

    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::setprecision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
        << height - margin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">" << x_label
        << "</text>\n";
    out << "<text x=\"15\" y=\"" << height / 2 << "\" transform=\"rotate(-90 15 " << height / 2
        << ")\" text-anchor=\"middle\">" << y_label << "</text>\n";
    if (!points.empty()) {
        out << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
        for (const auto& pt : points) out << sx(pt.x) << ',' << sy(pt.y) << ' ';
        out << "\"/>\n";
        for (const auto& pt : points) {
            out << "<line x1=\"" << sx(pt.x) << "\" y1=\"" << sy(pt.lo) << "\" x2=\"" << sx(pt.x) << "\" y2=\""
                << sy(pt.hi) << "\" stroke=\"gray\"/>\n";
            out << "<circle cx=\"" << sx(pt.x) << "\" cy=\"" << sy(pt.y) << "\" r=\"3\" fill=\"steelblue\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace hgc::workbench
