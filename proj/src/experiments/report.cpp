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

#include "sact/report.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace sact {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

void ExperimentReport::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("report row width mismatch");
  rows.push_back(std::move(row));
}

void ExperimentReport::add_aggregate(const std::string& name, double value) {
  aggregates.emplace_back(name, format_number(value));
}

void ExperimentReport::add_aggregate(const std::string& name,
                                     const std::string& value) {
  aggregates.emplace_back(name, value);
}

const std::string& ExperimentReport::aggregate(const std::string& name) const {
  for (const auto& [k, v] : aggregates) {
    if (k == name) return v;
  }
  throw std::out_of_range("no aggregate named '" + name + "'");
}

double ExperimentReport::aggregate_number(const std::string& name) const {
  return std::stod(aggregate(name));
}

bool ExperimentReport::has_aggregate(const std::string& name) const {
  for (const auto& [k, v] : aggregates) {
    if (k == name) return true;
  }
  return false;
}

std::vector<double> ExperimentReport::column_numbers(
    const std::string& column) const {
  std::size_t idx = columns.size();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == column) {
      idx = i;
      break;
    }
  }
  if (idx == columns.size())
    throw std::out_of_range("no column named '" + column + "'");
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(std::stod(row[idx]));
  return out;
}

std::string ExperimentReport::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  for (const auto& [name, value] : aggregates) {
    out += "#agg,";
    out += name;
    out += ',';
    out += value;
    out += '\n';
  }
  return out;
}

}  // namespace sact
