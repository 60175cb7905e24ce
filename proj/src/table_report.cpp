#include "semirings/table_report.hpp"

#include <stdexcept>

namespace semirings {

namespace {

constexpr int64_t Q = kPublishedUnknown;
constexpr int64_t X = kPublishedUnavailable;

using Rows = std::vector<std::array<int64_t, 4>>;

ReferenceTable make_table_1() {
  ReferenceTable t;
  t.id = 1;
  t.title = "Semirings";
  t.two_modes = true;
  t.published_rows = 7;
  t.published = {
      Rows{{1, Q, 1, 1},
           {10, Q, 4, 2},
           {132, Q, 22, 6},
           {2341, Q, 169, 40},
           {57427, Q, 1819, 295},
           {7571579, Q, 41104, 3246},
           {X, X, Q, 59314}},
      Rows{{1, Q, 1, 1},
           {9, Q, 4, 2},
           {106, Q, 21, 6},
           {1713, Q, 155, 38},
           {38247, Q, 1561, 262},
           {4102358, Q, 30112, 2681},
           {X, X, Q, 43331}},
  };
  return t;
}

ReferenceTable make_table_2() {
  ReferenceTable t;
  t.id = 2;
  t.title = "Commutative semirings (x*y = y*x)";
  t.two_modes = false;
  t.base.commutative_mul = true;
  t.published_rows = 7;
  t.published = {Rows{{1, 1, 1, 1},
                      {8, 4, 4, 4},
                      {80, 18, 20, 18},
                      {1067, 169, 141, 169},
                      {18188, 1990, 1276, 1990},
                      {543458, 32212, 17621, 2075},
                      {Q, Q, Q, 25640}}};
  return t;
}

ReferenceTable make_table_3() {
  ReferenceTable t;
  t.id = 3;
  t.title = "Additively idempotent (ai-) semirings (x + x = x)";
  t.two_modes = true;
  t.base.ai = true;
  t.published_rows = 8;
  t.published = {
      Rows{{1, 1, 1, 1},
           {6, 2, 2, 1},
           {61, 12, 11, 3},
           {866, 129, 73, 20},
           {15751, 1852, 703, 149},
           {354409, 33391, 9195, 1488},
           {9908909, Q, Q, 18554},
           {X, Q, Q, 295292}},
      Rows{{1, 1, 1, 1},
           {5, 2, 2, 1},
           {45, 10, 10, 3},
           {581, 93, 64, 18},
           {9750, 1207, 574, 125},
           {205744, 20142, 6835, 1150},
           {5470437, Q, Q, 13171},
           {Q, Q, Q, 116274}},
  };
  return t;
}

ReferenceTable make_table_4() {
  ReferenceTable t;
  t.id = 4;
  t.title = "Commutative ai-semirings (x*y = y*x and x + x = x)";
  t.two_modes = false;
  t.base.ai = true;
  t.base.commutative_mul = true;
  t.published_rows = 8;
  t.published = {Rows{{1, 1, 1, 1},
                      {4, 2, 2, 1},
                      {29, 8, 9, 3},
                      {289, 57, 55, 16},
                      {3589, 580, 437, 100},
                      {53661, 6639, 4296, 794},
                      {949843, 96264, 52043, 7493},
                      {Q, Q, Q, Q}}};
  return t;
}

constexpr const char* kColumnNames[4] = {"no additional constraints",
                                         "with 0", "with 1", "with 0 + 1"};

CensusFilter column_filter(const CensusFilter& base, int column) {
  CensusFilter f = base;
  if (column == 1 || column == 3) f.with_zero = true;
  if (column == 2 || column == 3) f.with_one = true;
  return f;
}

}  // namespace

const ReferenceTable& reference_table(int id) {
  static const ReferenceTable t1 = make_table_1();
  static const ReferenceTable t2 = make_table_2();
  static const ReferenceTable t3 = make_table_3();
  static const ReferenceTable t4 = make_table_4();
  switch (id) {
    case 1:
      return t1;
    case 2:
      return t2;
    case 3:
      return t3;
    case 4:
      return t4;
    default:
      throw std::invalid_argument("table id must be in {1, 2, 3, 4}");
  }
}

CellResult census_cell(int table_id, int n, int mode_index, int column,
                       const CensusOptions& options) {
  const ReferenceTable& ref = reference_table(table_id);
  if (n < 1 || n > OpTable::kMaxOrder) {
    throw std::invalid_argument("order must be in [1, 8]");
  }
  if (mode_index < 0 || mode_index >= (ref.two_modes ? 2 : 1) || column < 0 ||
      column > 3) {
    throw std::invalid_argument("cell outside the table");
  }
  const EquivMode mode =
      mode_index == 0 ? EquivMode::iso : EquivMode::iso_or_anti;
  CensusOptions count_opts = options;
  count_opts.collect = false;
  count_opts.sink = nullptr;

  CellResult cell;
  uint64_t value = 0;
  try {
    value = enumerate_semirings(
                CensusQuery{n, mode, column_filter(ref.base, column)},
                count_opts)
                .count;
  } catch (const capability_error&) {
    cell.text = "-";
    return cell;
  }
  cell.text = std::to_string(value);
  const int64_t published = n <= ref.published_rows
                                ? ref.published[mode_index][n - 1][column]
                                : kPublishedUnknown;
  if (published < 0) {
    cell.text += '*';
    cell.fresh = true;
  } else if (published != static_cast<int64_t>(value)) {
    cell.text += '!';
    cell.mismatch = "n=" + std::to_string(n) + " \"" + kColumnNames[column] +
                    "\" (" + (mode_index == 0 ? "iso" : "iso-or-anti") +
                    "): published " + std::to_string(published) +
                    ", computed " + std::to_string(value);
  }
  return cell;
}

TableDocument reproduce_table(int id, int max_order,
                              const CensusOptions& options) {
  const ReferenceTable& ref = reference_table(id);
  if (max_order < 1 || max_order > OpTable::kMaxOrder) {
    throw std::invalid_argument("max order must be in [1, 8]");
  }

  TableDocument doc;
  doc.title = ref.title;
  const int n_modes = ref.two_modes ? 2 : 1;
  for (int m = 0; m < n_modes; ++m) {
    for (int col = 0; col < 4; ++col) {
      doc.column_names.emplace_back(kColumnNames[col]);
      doc.column_modes.emplace_back(m == 0 ? "iso" : "iso-or-anti");
    }
  }

  bool any_fresh = false;
  std::vector<std::string> mismatches;
  for (int n = 1; n <= max_order; ++n) {
    doc.orders.push_back(n);
    std::vector<std::string> row;
    for (int m = 0; m < n_modes; ++m) {
      for (int col = 0; col < 4; ++col) {
        CellResult cell = census_cell(id, n, m, col, options);
        any_fresh = any_fresh || cell.fresh;
        if (!cell.mismatch.empty()) mismatches.push_back(cell.mismatch);
        row.push_back(std::move(cell.text));
      }
    }
    doc.cells.push_back(std::move(row));
  }

  if (any_fresh) {
    doc.footnotes.emplace_back(
        "[*] computed by this tool; no published reference value");
  }
  if (!mismatches.empty()) {
    std::string note = "[!] differs from the published value:";
    for (const auto& m : mismatches) note += " " + m + ";";
    note.pop_back();
    doc.footnotes.push_back(std::move(note));
  }
  return doc;
}

std::string TableDocument::to_csv() const {
  std::string out = "# " + title + "\n";
  if (!column_modes.empty() && column_modes.back() == "iso-or-anti") {
    out +=
        "# columns 2-5: up to isomorphism; columns 6-9: up to isomorphism or "
        "anti-isomorphism\n";
  } else {
    out += "# columns 2-5: up to isomorphism\n";
  }
  out += "n";
  for (const auto& name : column_names) out += "," + name;
  out += '\n';
  for (size_t r = 0; r < cells.size(); ++r) {
    out += std::to_string(orders[r]);
    for (const auto& cell : cells[r]) out += "," + cell;
    out += '\n';
  }
  for (const auto& note : footnotes) out += "# " + note + "\n";
  return out;
}

std::string TableDocument::to_markdown() const {
  std::string out = "### " + title + "\n\n";
  out += "| n |";
  for (size_t c = 0; c < column_names.size(); ++c) {
    out += " " + column_names[c] + " [" + column_modes[c] + "] |";
  }
  out += "\n|--:|";
  for (size_t c = 0; c < column_names.size(); ++c) out += "--:|";
  out += '\n';
  for (size_t r = 0; r < cells.size(); ++r) {
    out += "| " + std::to_string(orders[r]) + " |";
    for (const auto& cell : cells[r]) out += " " + cell + " |";
    out += '\n';
  }
  if (!footnotes.empty()) {
    out += '\n';
    for (const auto& note : footnotes) out += note + "\n";
  }
  return out;
}

}  // namespace semirings
