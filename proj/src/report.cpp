#include "srah/report.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace srah {
namespace {

std::string fmt(const char* format, ...) {
    char buf[128];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

FailureReason parse_failure_reason(const std::string& s) {
    for (FailureReason r : {FailureReason::None, FailureReason::NoInitialPath,
                            FailureReason::BlockedNoRecovery, FailureReason::ReplanFailed,
                            FailureReason::Timeout}) {
        if (s == failure_reason_name(r)) return r;
    }
    throw config_error("unknown failure reason: " + s);
}

PlannerKind parse_planner(const std::string& s) {
    for (PlannerKind k : kAllPlanners)
        if (s == planner_name(k)) return k;
    throw config_error("unknown planner: " + s);
}

void write_file(const std::filesystem::path& destination, const std::string& content) {
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + destination.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + destination.string());
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

std::string pm(double mean, double std, const char* format) {
    return fmt(format, mean) + "\xC2\xB1" + fmt(format, std);
}

}  // namespace

std::string trials_csv(const std::vector<TrialRecord>& records, bool mask_timing) {
    std::string out =
        "trial_id,planner,success,steps,planning_time_ms,replan_count,"
        "failure_reason,grid_seed,dynamics_seed,rho,p_dyn\n";
    for (const TrialRecord& r : records) {
        out += fmt("%d,", r.trial_id);
        out += planner_name(r.planner);
        out += fmt(",%d,%d,", r.success ? 1 : 0, r.steps);
        out += fmt("%.6f,", mask_timing ? 0.0 : r.planning_time_ms);
        out += fmt("%d,", r.replan_count);
        out += failure_reason_name(r.failure_reason);
        out += fmt(",%" PRIu64 ",%" PRIu64 ",", r.grid_seed, r.dynamics_seed);
        out += fmt("%.6f,%.6f\n", r.rho, r.p_dyn);
    }
    return out;
}

void write_trials_csv(const std::vector<TrialRecord>& records,
                      const std::filesystem::path& destination, bool mask_timing) {
    write_file(destination, trials_csv(records, mask_timing));
}

std::vector<TrialRecord> parse_trials_csv(const std::string& csv) {
    std::vector<TrialRecord> records;
    std::stringstream ss(csv);
    std::string line;
    if (!std::getline(ss, line)) throw config_error("empty trials CSV");
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 11) throw config_error("malformed trials CSV row: " + line);
        TrialRecord r;
        r.trial_id = std::stoi(f[0]);
        r.planner = parse_planner(f[1]);
        r.success = f[2] == "1";
        r.steps = std::stoi(f[3]);
        r.planning_time_ms = std::stod(f[4]);
        r.replan_count = std::stoi(f[5]);
        r.failure_reason = parse_failure_reason(f[6]);
        r.grid_seed = std::stoull(f[7]);
        r.dynamics_seed = std::stoull(f[8]);
        r.rho = std::stod(f[9]);
        r.p_dyn = std::stod(f[10]);
        records.push_back(r);
    }
    return records;
}

std::string summary_table(const std::vector<AggregateStats>& stats) {
    if (stats.empty()) throw config_error("summary: no stats");
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Planner", "Success (%)", "Steps", "Time (ms)", "Replans"});
    for (const AggregateStats& s : stats) {
        std::string steps = "-";
        if (s.steps_mean) {
            steps = s.steps_std ? pm(*s.steps_mean, *s.steps_std, "%.1f")
                                : fmt("%.1f", *s.steps_mean);
        }
        rows.push_back({planner_name(s.planner), fmt("%.1f", 100.0 * s.success_rate), steps,
                        pm(s.time_mean_ms, s.time_std_ms, "%.2f"), fmt("%.2f", s.mean_replans)});
    }

    // Column widths in display characters; the ± sign is 2 bytes, 1 column.
    auto display_width = [](const std::string& s) {
        std::size_t w = 0;
        for (char c : s)
            if ((c & 0xC0) != 0x80) ++w;
        return w;
    };
    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], display_width(row[i]));

    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size())
                out += std::string(widths[i] - display_width(row[i]) + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

std::string summary_json(const std::vector<AggregateStats>& stats, bool mask_timing) {
    nlohmann::ordered_json planners = nlohmann::ordered_json::array();
    for (const AggregateStats& s : stats) {
        nlohmann::ordered_json row;
        row["planner"] = planner_name(s.planner);
        row["n_trials"] = s.n_trials;
        row["n_success"] = s.n_success;
        row["success_pct"] = std::stod(fmt("%.1f", 100.0 * s.success_rate));
        if (s.steps_mean) row["steps_mean"] = std::stod(fmt("%.1f", *s.steps_mean));
        if (s.steps_std) row["steps_std"] = std::stod(fmt("%.1f", *s.steps_std));
        row["time_mean_ms"] = mask_timing ? 0.0 : std::stod(fmt("%.2f", s.time_mean_ms));
        row["time_std_ms"] = mask_timing ? 0.0 : std::stod(fmt("%.2f", s.time_std_ms));
        row["mean_replans"] = std::stod(fmt("%.2f", s.mean_replans));
        planners.push_back(row);
    }
    nlohmann::ordered_json doc;
    doc["planners"] = planners;
    return doc.dump(2) + "\n";
}

void write_summary(const std::vector<AggregateStats>& stats,
                   const std::filesystem::path& text_destination,
                   const std::filesystem::path& json_destination, bool mask_timing) {
    write_file(text_destination, summary_table(stats));
    write_file(json_destination, summary_json(stats, mask_timing));
}

std::string plot_data(const std::vector<TrialRecord>& records, FigureKind kind,
                      bool mask_timing) {
    switch (kind) {
        case FigureKind::SuccessBar: {
            std::string out = "planner,success_pct\n";
            for (const AggregateStats& s : aggregate(records))
                out += fmt("%s,%.1f\n", planner_name(s.planner), 100.0 * s.success_rate);
            return out;
        }
        case FigureKind::StepsDistribution: {
            std::string out = "planner,steps\n";
            for (const TrialRecord& r : records)
                if (r.success) out += fmt("%s,%d\n", planner_name(r.planner), r.steps);
            return out;
        }
        case FigureKind::OverheadScatter: {
            std::string out = "planner,time_mean_ms,mean_replans\n";
            for (const AggregateStats& s : aggregate(records))
                out += fmt("%s,%.2f,%.2f\n", planner_name(s.planner),
                           mask_timing ? 0.0 : s.time_mean_ms, s.mean_replans);
            return out;
        }
        case FigureKind::DensityCurves: {
            // Distinct densities in ascending order.
            std::vector<double> rhos;
            for (const TrialRecord& r : records)
                if (std::find(rhos.begin(), rhos.end(), r.rho) == rhos.end())
                    rhos.push_back(r.rho);
            if (rhos.empty()) throw config_error("density_curves: no records");
            std::sort(rhos.begin(), rhos.end());

            std::string out = "rho,planner,success_pct\n";
            for (double rho : rhos) {
                std::vector<TrialRecord> slice;
                for (const TrialRecord& r : records)
                    if (r.rho == rho) slice.push_back(r);
                for (const AggregateStats& s : aggregate(slice))
                    out += fmt("%.2f,%s,%.1f\n", rho, planner_name(s.planner),
                               100.0 * s.success_rate);
            }
            return out;
        }
    }
    throw config_error("unknown figure kind");
}

void emit_plot_data(const std::vector<TrialRecord>& records, FigureKind kind,
                    const std::filesystem::path& destination, bool mask_timing) {
    write_file(destination, plot_data(records, kind, mask_timing));
}

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 400;
constexpr int kMarginLeft = 60;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 50;

const char* planner_color(const std::string& name) {
    if (name == "SRAH") return "#e08020";
    if (name == "BFS") return "#3060c0";
    return "#808080";
}

struct SvgBuilder {
    std::string body;

    void rect(double x, double y, double w, double h, const std::string& fill) {
        body += fmt("  <rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"%s\"/>\n",
                    x, y, w, h, fill.c_str());
    }
    void line(double x1, double y1, double x2, double y2, const std::string& stroke) {
        body += fmt(
            "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
            "stroke-width=\"1.5\"/>\n",
            x1, y1, x2, y2, stroke.c_str());
    }
    void text(double x, double y, const std::string& s, const char* anchor = "middle") {
        body += fmt(
            "  <text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"12\" "
            "text-anchor=\"%s\">%s</text>\n",
            x, y, anchor, s.c_str());
    }

    std::string finish() const {
        return fmt(
                   "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                   "viewBox=\"0 0 %d %d\">\n",
                   kWidth, kHeight, kWidth, kHeight) +
               body + "</svg>\n";
    }
};

void draw_axes(SvgBuilder& svg, const std::string& x_label, const std::string& y_label) {
    svg.line(kMarginLeft, kHeight - kMarginBottom, kWidth - kMarginRight,
             kHeight - kMarginBottom, "#000000");
    svg.line(kMarginLeft, kMarginTop, kMarginLeft, kHeight - kMarginBottom, "#000000");
    svg.text((kMarginLeft + kWidth - kMarginRight) / 2.0, kHeight - 12, x_label);
    svg.text(18, (kMarginTop + kHeight - kMarginBottom) / 2.0, y_label, "start");
}

struct PlotRows {
    std::vector<std::vector<std::string>> rows;  // data rows, header dropped
};

PlotRows parse_plot_csv(const std::string& csv, std::size_t expect_cols) {
    PlotRows out;
    std::stringstream ss(csv);
    std::string line;
    if (!std::getline(ss, line)) throw config_error("empty plot data");
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != expect_cols) throw config_error("malformed plot row: " + line);
        out.rows.push_back(std::move(fields));
    }
    return out;
}

}  // namespace

std::string svg_chart(const std::string& plot_csv, FigureKind kind) {
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    SvgBuilder svg;

    switch (kind) {
        case FigureKind::SuccessBar: {
            const PlotRows data = parse_plot_csv(plot_csv, 2);
            draw_axes(svg, "planner", "success (%)");
            const std::size_t n = data.rows.size();
            for (std::size_t i = 0; i < n; ++i) {
                const std::string& name = data.rows[i][0];
                const double pct = std::stod(data.rows[i][1]);
                const double slot = plot_w / static_cast<double>(n);
                const double bar_w = slot * 0.6;
                const double x = kMarginLeft + slot * i + (slot - bar_w) / 2.0;
                const double h = plot_h * pct / 100.0;
                svg.rect(x, kHeight - kMarginBottom - h, bar_w, h, planner_color(name));
                svg.text(x + bar_w / 2.0, kHeight - kMarginBottom + 16, name);
                svg.text(x + bar_w / 2.0, kHeight - kMarginBottom - h - 4, data.rows[i][1]);
            }
            return svg.finish();
        }
        case FigureKind::OverheadScatter: {
            const PlotRows data = parse_plot_csv(plot_csv, 3);
            draw_axes(svg, "mean planning time (ms)", "mean replans");
            double max_t = 0.1, max_r = 0.1;
            for (const auto& row : data.rows) {
                max_t = std::max(max_t, std::stod(row[1]));
                max_r = std::max(max_r, std::stod(row[2]));
            }
            for (const auto& row : data.rows) {
                const double x = kMarginLeft + plot_w * std::stod(row[1]) / max_t * 0.9;
                const double y = kHeight - kMarginBottom - plot_h * std::stod(row[2]) / max_r * 0.9;
                svg.rect(x - 4, y - 4, 8, 8, planner_color(row[0]));
                svg.text(x, y - 8, row[0]);
            }
            return svg.finish();
        }
        case FigureKind::DensityCurves: {
            const PlotRows data = parse_plot_csv(plot_csv, 3);
            draw_axes(svg, "static obstacle density", "success (%)");
            double min_rho = 1.0, max_rho = 0.0;
            for (const auto& row : data.rows) {
                min_rho = std::min(min_rho, std::stod(row[0]));
                max_rho = std::max(max_rho, std::stod(row[0]));
            }
            const double span = std::max(max_rho - min_rho, 1e-9);
            auto px = [&](double rho) {
                return kMarginLeft + plot_w * 0.05 + plot_w * 0.9 * (rho - min_rho) / span;
            };
            auto py = [&](double pct) {
                return kHeight - kMarginBottom - plot_h * pct / 100.0;
            };
            // One polyline per planner, preserving row order within a planner.
            std::vector<std::string> names;
            for (const auto& row : data.rows)
                if (std::find(names.begin(), names.end(), row[1]) == names.end())
                    names.push_back(row[1]);
            for (const std::string& name : names) {
                double prev_x = 0, prev_y = 0;
                bool have_prev = false;
                for (const auto& row : data.rows) {
                    if (row[1] != name) continue;
                    const double x = px(std::stod(row[0]));
                    const double y = py(std::stod(row[2]));
                    if (have_prev) svg.line(prev_x, prev_y, x, y, planner_color(name));
                    svg.rect(x - 3, y - 3, 6, 6, planner_color(name));
                    prev_x = x;
                    prev_y = y;
                    have_prev = true;
                }
                if (have_prev) svg.text(prev_x, prev_y - 8, name);
            }
            return svg.finish();
        }
        case FigureKind::StepsDistribution:
            throw config_error("no SVG renderer for steps_distribution; use the raw CSV");
    }
    throw config_error("unknown figure kind");
}

void emit_svg_chart(const std::string& plot_csv, FigureKind kind,
                    const std::filesystem::path& destination) {
    write_file(destination, svg_chart(plot_csv, kind));
}

}  // namespace srah
