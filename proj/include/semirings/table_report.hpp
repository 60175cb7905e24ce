#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semirings/semiring_census.hpp"

namespace semirings {

/// Sentinels for published reference cells.
inline constexpr int64_t kPublishedUnknown = -1;      // printed as "?"
inline constexpr int64_t kPublishedUnavailable = -2;  // printed as "-"

struct ReferenceTable {
  int id = 0;
  std::string title;
  bool two_modes = false;  // whether an iso-or-anti block is published
  CensusFilter base;       // constraints shared by every column
  int published_rows = 0;
  /// published[mode][n-1][column]; columns are (no additional constraints,
  /// with 0, with 1, with 0 + 1).
  std::vector<std::vector<std::array<int64_t, 4>>> published;
};

/// The four published census tables: 1 = semirings, 2 = commutative
/// semirings, 3 = ai-semirings, 4 = commutative ai-semirings.
const ReferenceTable& reference_table(int id);

/// A rendered reproduction. Cell texts carry a suffix marker: '*' for values
/// with no published reference, '!' for values that disagree with the
/// published one; cells beyond the supported census range render as "-".
struct TableDocument {
  std::string title;
  std::vector<std::string> column_names;  // one per numeric column
  std::vector<std::string> column_modes;  // "iso" or "iso-or-anti", parallel
  std::vector<int> orders;
  std::vector<std::vector<std::string>> cells;  // [row][column]
  std::vector<std::string> footnotes;

  std::string to_csv() const;
  std::string to_markdown() const;
};

TableDocument reproduce_table(int id, int max_order,
                              const CensusOptions& options = {});

struct CellResult {
  std::string text;       // value with marker suffix, or "-"
  bool fresh = false;     // '*' applied: no published reference
  std::string mismatch;   // nonempty when the published value disagrees
};

/// One cell of a reference-table reproduction: column 0..3 within the given
/// mode block (0 = iso, 1 = iso-or-anti).
CellResult census_cell(int table_id, int n, int mode_index, int column,
                       const CensusOptions& options = {});

}  // namespace semirings
