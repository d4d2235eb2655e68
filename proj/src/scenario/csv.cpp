// Copyright 2026 The Zermelo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zermelo/error.hpp"
#include "zermelo/scenario.hpp"

namespace zermelo::scenario {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

double parse_double(const std::string& cell, const std::filesystem::path& path, std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (cell.empty() || end != cell.c_str() + cell.size() || errno == ERANGE) {
    std::ostringstream os;
    os << path.string() << ":" << line << ": bad number '" << cell << "'";
    throw IoError(os.str());
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_trajectory_csv(const std::vector<TrajectorySample>& samples, const std::filesystem::path& path) {
  if (samples.empty()) throw Error("emit_trajectory_csv: no samples");
  const std::size_t dim = samples.front().psi.size();
  std::ofstream out = open_for_write(path);
  out << "t,fidelity,norm,trace_hc_sq,variance_hc";
  for (std::size_t i = 0; i < dim; ++i) out << ",re_psi_" << i << ",im_psi_" << i;
  out << '\n';
  for (const TrajectorySample& s : samples) {
    out << format_double(s.t) << ',' << format_double(s.fidelity_to_target) << ',' << format_double(s.norm) << ','
        << format_double(s.trace_hc_sq) << ',' << format_double(s.variance_hc);
    for (const Complex& z : s.psi) out << ',' << format_double(z.real()) << ',' << format_double(z.imag());
    out << '\n';
  }
  finish(out, path);
}

std::vector<TrajectoryRow> read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line)) throw IoError(path.string() + ": empty file");
  std::size_t columns = 1;
  for (char c : line) columns += c == ',';
  if (columns < 5 || (columns - 5) % 2 != 0) throw IoError(path.string() + ": malformed header");
  const std::size_t dim = (columns - 5) / 2;

  std::vector<TrajectoryRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<double> v;
    v.reserve(columns);
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(parse_double(cell, path, lineno));
    if (v.size() != columns) {
      std::ostringstream os;
      os << path.string() << ":" << lineno << ": expected " << columns << " columns, got " << v.size();
      throw IoError(os.str());
    }
    TrajectoryRow r{v[0], v[1], v[2], v[3], v[4], ComplexVector(dim)};
    for (std::size_t i = 0; i < dim; ++i) r.psi[i] = Complex(v[5 + 2 * i], v[6 + 2 * i]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void emit_quantization_table(const models::QuantizationTable& table, const std::filesystem::path& path) {
  if (table.rows.empty()) throw Error("emit_quantization_table: empty table");
  std::ofstream out = open_for_write(path);
  out << "n,k,delta_t\n";
  for (const models::QuantizationRow& r : table.rows)
    out << r.n << ',' << format_double(r.k) << ',' << format_double(r.delta_t) << '\n';
  finish(out, path);
}

void emit_adiabaticity_csv(const AdiabaticityReport& report, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  out << 't';
  for (std::size_t b = 0; b < report.populations.size(); ++b) out << ",p_" << b;
  out << '\n';
  for (std::size_t j = 0; j < report.times.size(); ++j) {
    out << format_double(report.times[j]);
    for (const auto& series : report.populations) out << ',' << format_double(series[j]);
    out << '\n';
  }
  finish(out, path);
}

}  // namespace zermelo::scenario
