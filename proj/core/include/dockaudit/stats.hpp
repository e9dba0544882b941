//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_STATS_HPP
#define DOCKAUDIT_STATS_HPP

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dockaudit {

struct ResultRow {
  std::string case_id;
  double top1 = 0.0;
  double top5 = 0.0;
  std::vector<std::string> flags;
  // Unknown TSV columns, preserved on write.
  std::vector<std::pair<std::string, std::string>> extra;
};

struct ResultTable {
  std::string method;
  std::vector<ResultRow> rows;
  std::vector<std::string> extra_columns;
};

enum class RmsdColumn { Top1, Top5 };

struct TableSchema {
  std::string case_id = "case_id";
  std::string top1 = "top1";
  std::string top5 = "top5";
};

/// Reads a tab-separated result table. The header row is mandatory; the
/// three schema columns must be present and any others are preserved.
ResultTable read_result_table(std::string_view tsv, const TableSchema &schema = {});
std::string write_result_table(const ResultTable &table);

/// Adds a penalty row (missing_value/missing_value, flagged "penalty") for
/// every expected case absent from the table, and replaces rows with
/// non-finite or negative values. Present valid rows are never altered.
ResultTable penalty_fill(ResultTable table,
                         std::span<const std::string> expected_ids,
                         double missing_value = 20.0);

/// Fraction of rows with column value <= threshold (closed comparison).
/// Throws Error on an empty table.
double success_rate(const ResultTable &table, RmsdColumn column,
                    double threshold);

struct Curve {
  std::vector<double> grid;      // ascending A values
  std::vector<double> fraction;  // non-decreasing, in [0, 1]
};

/// Cumulative success curve: fraction at each grid point equals
/// success_rate at that threshold.
Curve cumulative_curve(const ResultTable &table, RmsdColumn column,
                       double grid_step = 0.1, double grid_max = 20.0);

enum class LeakClass : std::uint8_t { Hard, NearNeighbor, Extreme };

std::string_view leak_class_name(LeakClass cls);

/// case_id -> class. Extreme cases satisfy the near-neighbor criteria too,
/// so per-class stats for "near_neighbor" cover NearNeighbor and Extreme
/// rows together while "extreme" reports the high-similarity subset alone.
using Classification = std::map<std::string, LeakClass>;

/// Builds a classification from published case-id lists: ids in
/// `extreme_ids` are Extreme, other ids in `near_ids` are NearNeighbor,
/// and every remaining id in `all_ids` is Hard.
Classification classification_from_lists(const std::set<std::string> &near_ids,
                                         const std::set<std::string> &extreme_ids,
                                         const std::vector<std::string> &all_ids);

struct SubsetRow {
  std::string subset;
  int n = 0;
  double top1_at_1 = 0.0;
  double top5_at_1 = 0.0;
  double top1_at_2 = 0.0;
  double top5_at_2 = 0.0;
};

struct SubsetStats {
  std::vector<SubsetRow> rows;  // hard, near_neighbor, extreme, overall
  std::vector<std::string> unclassified;  // table rows without a class
};

/// Success rates at 1.0 and 2.0 A per audit class and overall.
SubsetStats subset_stats(const ResultTable &table,
                         const Classification &classification);

struct PairedTTest {
  double t = 0.0;
  double p = 1.0;  // two-tailed
  int dof = 0;
};

/// Paired t-test on equal-length samples; all-zero differences give
/// t = 0, p = 1. Throws Error on length mismatch, n < 2, or zero variance
/// with a nonzero mean difference.
PairedTTest paired_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace dockaudit

#endif  // DOCKAUDIT_STATS_HPP
