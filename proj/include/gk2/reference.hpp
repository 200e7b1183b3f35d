#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gk2/fengrao.hpp"
#include "gk2/quantum.hpp"

namespace gk2 {

/// One transcribed row of a dual-code table. The length column is kept verbatim
/// because the transcription carries typos there.
struct ReferenceCodeRow {
  int line = 0;
  std::string length_cell;
  int_t k = 0;
  int_t rho = 0;
  int_t nu = 0;
  int_t d_ord = 0;
};

struct Discrepancy {
  enum class Kind {
    length_column,  // the length cell disagrees with N; all other cells match
    value,          // k, nu or d_ord disagrees with the computation
    not_a_nongap,   // the tabulated rho is a gap
    omitted_row,    // a computed row inside the tabulated range has no table entry
    quantum_bound,  // a quantum range bound disagrees with the formula
  };
  Kind kind = Kind::value;
  std::string source;
  int line = 0;
  std::string detail;
};

inline const char* to_string(Discrepancy::Kind k) {
  switch (k) {
    case Discrepancy::Kind::length_column: return "length-column";
    case Discrepancy::Kind::value: return "value";
    case Discrepancy::Kind::not_a_nongap: return "not-a-nongap";
    case Discrepancy::Kind::omitted_row: return "omitted-row";
    case Discrepancy::Kind::quantum_bound: return "quantum-bound";
  }
  return "?";
}

struct DiscrepancyReport {
  std::vector<Discrepancy> entries;
  std::size_t rows_checked = 0;
  std::size_t cells_checked = 0;

  std::size_t count(Discrepancy::Kind k) const {
    std::size_t n = 0;
    for (const auto& d : entries) n += d.kind == k;
    return n;
  }
};

namespace detail {

inline std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open reference table '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

inline int_t parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    require(used == s.size(), "");
    return v;
  } catch (const std::exception&) {
    throw invalid_argument("malformed integer '" + s + "' in " + where);
  }
}

}  // namespace detail

/// CSV columns: n_column,k,rho_l,nu_l,d_ord (header line required).
inline std::vector<ReferenceCodeRow> load_code_reference(const std::string& path) {
  std::vector<ReferenceCodeRow> out;
  int line = 1;
  for (const auto& cells : detail::read_csv(path)) {
    ++line;
    detail::require(cells.size() == 5, path + ":" + std::to_string(line) + ": expected 5 columns");
    const std::string where = path + ":" + std::to_string(line);
    out.push_back({line, cells[0], detail::parse_int(cells[1], where), detail::parse_int(cells[2], where),
                   detail::parse_int(cells[3], where), detail::parse_int(cells[4], where)});
  }
  return out;
}

/// CSV columns: l,d_ord,s_min,s_max (header line required).
inline std::vector<QuantumReference> load_quantum_reference(const std::string& path) {
  std::vector<QuantumReference> out;
  int line = 1;
  for (const auto& cells : detail::read_csv(path)) {
    ++line;
    detail::require(cells.size() == 4, path + ":" + std::to_string(line) + ": expected 4 columns");
    const std::string where = path + ":" + std::to_string(line);
    out.push_back({detail::parse_int(cells[0], where), detail::parse_int(cells[1], where),
                   detail::parse_int(cells[2], where), detail::parse_int(cells[3], where)});
  }
  return out;
}

/// Recomputes every tabulated row from the semigroup and records each disagreement.
/// Duplicate table rows are compared like any other row.
inline DiscrepancyReport compare_code_table(const NumericalSemigroup& s, const CurveParams& c,
                                            const std::vector<ReferenceCodeRow>& rows, const std::string& source) {
  DiscrepancyReport report;
  if (rows.empty()) return report;
  const int_t length = c.code_length();
  int_t max_rho = 0;
  int_t min_rho = rows.front().rho;
  for (const auto& r : rows) {
    max_rho = std::max(max_rho, r.rho);
    min_rho = std::min(min_rho, r.rho);
  }
  const int_t l_first = s.contains(min_rho) ? s.index_of(min_rho) : 1;
  const int_t l_last = s.count_nongaps_upto(max_rho);
  const auto computed = code_table(s, c, l_first, l_last);
  std::map<int_t, CodeTableRow> by_rho;
  for (const auto& row : computed) by_rho.emplace(row.rho, row);

  std::set<int_t> present;
  for (const auto& r : rows) {
    ++report.rows_checked;
    report.cells_checked += 5;
    if (!s.contains(r.rho)) {
      report.entries.push_back({Discrepancy::Kind::not_a_nongap, source, r.line,
                                "rho " + std::to_string(r.rho) + " is a gap"});
      continue;
    }
    present.insert(r.rho);
    const auto& row = by_rho.at(r.rho);
    std::string bad;
    auto cmp = [&](const char* name, int_t table, int_t value) {
      if (table == value) return;
      if (!bad.empty()) bad += "; ";
      bad += std::string(name) + ": table " + std::to_string(table) + ", computed " + std::to_string(value);
    };
    cmp("k", r.k, row.dimension);
    cmp("nu", r.nu, row.nu);
    cmp("d_ord", r.d_ord, row.d_ord);
    if (!bad.empty())
      report.entries.push_back({Discrepancy::Kind::value, source, r.line, "rho " + std::to_string(r.rho) + ": " + bad});
    if (r.length_cell != std::to_string(length))
      report.entries.push_back({Discrepancy::Kind::length_column, source, r.line,
                                "rho " + std::to_string(r.rho) + ": length cell '" + r.length_cell + "', N = " +
                                    std::to_string(length)});
  }
  for (const auto& row : computed)
    if (!present.count(row.rho))
      report.entries.push_back({Discrepancy::Kind::omitted_row, source, 0,
                                "no row for rho " + std::to_string(row.rho) + " (k = " +
                                    std::to_string(row.dimension) + ", nu = " + std::to_string(row.nu) +
                                    ", d_ord = " + std::to_string(row.d_ord) + ")"});
  return report;
}

/// Recomputes tabulated quantum ranges; every mismatching bound becomes an entry.
inline DiscrepancyReport compare_quantum_table(const NumericalSemigroup& s, const CurveParams& c,
                                               const std::vector<QuantumReference>& rows, const std::string& source) {
  DiscrepancyReport report;
  int line = 1;
  for (const auto& ref : rows) {
    ++line;
    ++report.rows_checked;
    report.cells_checked += 4;
    const auto range = range_prop(c, s, ref.index, ref);
    if (range.discrepancy)
      report.entries.push_back({Discrepancy::Kind::quantum_bound, source, line,
                                "l " + std::to_string(ref.index) + ": " + *range.discrepancy});
  }
  return report;
}

}  // namespace gk2
