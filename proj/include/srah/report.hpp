#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "srah/harness.hpp"

namespace srah {

enum class FigureKind {
    SuccessBar,
    StepsDistribution,
    OverheadScatter,
    DensityCurves,
};

// trials.csv: header + one row per record, sorted by (planner, trial_id).
// Columns: trial_id, planner, success, steps, planning_time_ms (6 dp),
// replan_count, failure_reason, grid_seed, dynamics_seed, rho, p_dyn.
// mask_timing zeroes the timing column for byte-reproducible output.
std::string trials_csv(const std::vector<TrialRecord>& records, bool mask_timing = false);
void write_trials_csv(const std::vector<TrialRecord>& records,
                      const std::filesystem::path& destination, bool mask_timing = false);

// Parse-back of trials_csv output; used by round-trip checks.
std::vector<TrialRecord> parse_trials_csv(const std::string& csv);

// Human-readable aligned table: Planner, Success (%), Steps, Time (ms), Replans.
std::string summary_table(const std::vector<AggregateStats>& stats);
// Machine-readable JSON, one object per planner.
std::string summary_json(const std::vector<AggregateStats>& stats, bool mask_timing = false);
void write_summary(const std::vector<AggregateStats>& stats,
                   const std::filesystem::path& text_destination,
                   const std::filesystem::path& json_destination,
                   bool mask_timing = false);

// Plot-ready CSV per figure kind:
//   success_bar:        planner, success_pct
//   steps_distribution: planner, steps          (one row per successful trial)
//   overhead_scatter:   planner, time_mean_ms, mean_replans
//   density_curves:     rho, planner, success_pct
std::string plot_data(const std::vector<TrialRecord>& records, FigureKind kind,
                      bool mask_timing = false);
void emit_plot_data(const std::vector<TrialRecord>& records, FigureKind kind,
                    const std::filesystem::path& destination, bool mask_timing = false);

// Minimal standalone SVG (rect/line/text primitives only), deterministic
// for identical input. Input is the plot_data CSV for the same kind.
std::string svg_chart(const std::string& plot_csv, FigureKind kind);
void emit_svg_chart(const std::string& plot_csv, FigureKind kind,
                    const std::filesystem::path& destination);

}  // namespace srah
