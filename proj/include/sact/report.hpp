/*
 * Copyright 2026 The sact Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sact {

/// Floats are printed at 6 significant digits everywhere, so reports are
/// byte-identical across runs.
std::string format_number(double value);

/// Tabular experiment output.  CSV layout: one header row, one row per
/// trial, then aggregate rows prefixed "#agg,".  Aggregates are
/// recomputable from the trial rows.
struct ExperimentReport {
  std::string experiment;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> aggregates;

  void add_row(std::vector<std::string> row);
  void add_aggregate(const std::string& name, double value);
  void add_aggregate(const std::string& name, const std::string& value);

  /// First aggregate with this name; throws if absent.
  const std::string& aggregate(const std::string& name) const;
  double aggregate_number(const std::string& name) const;
  bool has_aggregate(const std::string& name) const;

  /// Column values over all rows, parsed as doubles.
  std::vector<double> column_numbers(const std::string& column) const;

  std::string to_csv() const;
};

}  // namespace sact
