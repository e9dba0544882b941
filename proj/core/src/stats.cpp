//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dockaudit/error.hpp"
#include "dockaudit/numeric.hpp"
#include "text_util.hpp"

namespace dockaudit {

namespace {

using detail::parse_double;
using detail::split_lines;
using detail::trim;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find('\t', start);
    if (end == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

double row_value(const ResultRow &row, RmsdColumn column) {
  return column == RmsdColumn::Top1 ? row.top1 : row.top5;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

ResultTable read_result_table(std::string_view tsv, const TableSchema &schema) {
  auto lines = split_lines(tsv);
  if (lines.empty())
    throw ParseError("result table", 0, "missing header row");

  auto header = split_tabs(lines[0]);
  int id_col = -1, top1_col = -1, top5_col = -1;
  std::vector<std::pair<int, std::string>> extra_cols;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    std::string_view name = trim(header[static_cast<std::size_t>(i)]);
    if (name == schema.case_id)
      id_col = i;
    else if (name == schema.top1)
      top1_col = i;
    else if (name == schema.top5)
      top5_col = i;
    else if (!name.empty())
      extra_cols.emplace_back(i, std::string(name));
  }
  if (id_col < 0 || top1_col < 0 || top5_col < 0)
    throw ParseError("result table", 1,
                     "header must contain columns '" + schema.case_id + "', '" +
                         schema.top1 + "', '" + schema.top5 + "'");

  ResultTable table;
  for (const auto &[col, name] : extra_cols)
    table.extra_columns.push_back(name);

  for (int ln = 1; ln < static_cast<int>(lines.size()); ++ln) {
    std::string_view line = lines[static_cast<std::size_t>(ln)];
    if (trim(line).empty())
      continue;
    auto fields = split_tabs(line);
    auto need = static_cast<std::size_t>(std::max({id_col, top1_col, top5_col}));
    if (fields.size() <= need)
      throw ParseError("result table", ln + 1, "row has too few columns");
    ResultRow row;
    row.case_id = std::string(trim(fields[static_cast<std::size_t>(id_col)]));
    auto v1 = parse_double(fields[static_cast<std::size_t>(top1_col)]);
    auto v5 = parse_double(fields[static_cast<std::size_t>(top5_col)]);
    if (row.case_id.empty() || !v1 || !v5)
      throw ParseError("result table", ln + 1, "malformed row");
    row.top1 = *v1;
    row.top5 = *v5;
    for (const auto &[col, name] : extra_cols) {
      row.extra.emplace_back(
          name, col < static_cast<int>(fields.size())
                    ? std::string(fields[static_cast<std::size_t>(col)])
                    : std::string());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string write_result_table(const ResultTable &table) {
  std::string out = "case_id\ttop1\ttop5";
  for (const std::string &name : table.extra_columns)
    out += "\t" + name;
  out += "\n";
  for (const ResultRow &row : table.rows) {
    out += row.case_id;
    out += "\t" + format_value(row.top1);
    out += "\t" + format_value(row.top5);
    for (const std::string &name : table.extra_columns) {
      out += "\t";
      for (const auto &[key, value] : row.extra) {
        if (key == name) {
          out += value;
          break;
        }
      }
    }
    out += "\n";
  }
  return out;
}

ResultTable penalty_fill(ResultTable table,
                         std::span<const std::string> expected_ids,
                         double missing_value) {
  std::set<std::string> present;
  for (ResultRow &row : table.rows) {
    const bool bad = !std::isfinite(row.top1) || !std::isfinite(row.top5) ||
                     row.top1 < 0 || row.top5 < 0;
    if (bad) {
      row.top1 = missing_value;
      row.top5 = missing_value;
      row.flags.push_back("penalty");
    }
    present.insert(row.case_id);
  }
  for (const std::string &id : expected_ids) {
    if (present.count(id))
      continue;
    ResultRow row;
    row.case_id = id;
    row.top1 = missing_value;
    row.top5 = missing_value;
    row.flags.push_back("penalty");
    table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const ResultRow &a, const ResultRow &b) {
                     return a.case_id < b.case_id;
                   });
  return table;
}

double success_rate(const ResultTable &table, RmsdColumn column,
                    double threshold) {
  if (table.rows.empty())
    throw Error("success_rate: empty table");
  if (threshold <= 0)
    throw Error("success_rate: threshold must be positive");
  int hits = 0;
  for (const ResultRow &row : table.rows)
    hits += row_value(row, column) <= threshold ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(table.rows.size());
}

Curve cumulative_curve(const ResultTable &table, RmsdColumn column,
                       double grid_step, double grid_max) {
  if (table.rows.empty())
    throw Error("cumulative_curve: empty table");
  if (grid_step <= 0 || grid_max <= 0)
    throw Error("cumulative_curve: invalid grid");

  Curve curve;
  const int steps = static_cast<int>(std::round(grid_max / grid_step));
  for (int i = 0; i <= steps; ++i) {
    double thr = i * grid_step;
    int hits = 0;
    for (const ResultRow &row : table.rows)
      hits += row_value(row, column) <= thr ? 1 : 0;
    curve.grid.push_back(thr);
    curve.fraction.push_back(static_cast<double>(hits) /
                             static_cast<double>(table.rows.size()));
  }
  return curve;
}

std::string_view leak_class_name(LeakClass cls) {
  switch (cls) {
  case LeakClass::Hard: return "hard";
  case LeakClass::NearNeighbor: return "near_neighbor";
  case LeakClass::Extreme: return "extreme";
  }
  return "hard";
}

Classification classification_from_lists(const std::set<std::string> &near_ids,
                                         const std::set<std::string> &extreme_ids,
                                         const std::vector<std::string> &all_ids) {
  Classification out;
  for (const std::string &id : all_ids) {
    if (extreme_ids.count(id))
      out[id] = LeakClass::Extreme;
    else if (near_ids.count(id))
      out[id] = LeakClass::NearNeighbor;
    else
      out[id] = LeakClass::Hard;
  }
  return out;
}

SubsetStats subset_stats(const ResultTable &table,
                         const Classification &classification) {
  ResultTable hard, near, extreme;
  SubsetStats stats;

  for (const ResultRow &row : table.rows) {
    auto it = classification.find(row.case_id);
    if (it == classification.end()) {
      stats.unclassified.push_back(row.case_id);
      continue;
    }
    switch (it->second) {
    case LeakClass::Hard:
      hard.rows.push_back(row);
      break;
    case LeakClass::NearNeighbor:
      near.rows.push_back(row);
      break;
    case LeakClass::Extreme:
      // extreme cases meet the near-neighbor criteria as well
      near.rows.push_back(row);
      extreme.rows.push_back(row);
      break;
    }
  }

  auto emit = [&](std::string name, const ResultTable &subset) {
    SubsetRow row;
    row.subset = std::move(name);
    row.n = static_cast<int>(subset.rows.size());
    if (row.n > 0) {
      row.top1_at_1 = success_rate(subset, RmsdColumn::Top1, 1.0);
      row.top5_at_1 = success_rate(subset, RmsdColumn::Top5, 1.0);
      row.top1_at_2 = success_rate(subset, RmsdColumn::Top1, 2.0);
      row.top5_at_2 = success_rate(subset, RmsdColumn::Top5, 2.0);
    }
    stats.rows.push_back(std::move(row));
  };

  emit("hard", hard);
  emit("near_neighbor", near);
  emit("extreme", extreme);
  emit("overall", table);
  return stats;
}

PairedTTest paired_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error("paired_t_test: length mismatch");
  const int n = static_cast<int>(a.size());
  if (n < 2)
    throw Error("paired_t_test: need at least 2 pairs");

  double mean = 0.0;
  for (int i = 0; i < n; ++i)
    mean += a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
  mean /= n;

  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    double d = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)] - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / (n - 1));

  PairedTTest result;
  result.dof = n - 1;
  if (sd == 0.0) {
    if (mean == 0.0) {
      result.t = 0.0;
      result.p = 1.0;
      return result;
    }
    throw Error("paired_t_test: zero variance with nonzero mean difference");
  }
  result.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  result.p = student_t_two_tailed_p(result.t, static_cast<double>(result.dof));
  return result;
}

}  // namespace dockaudit
