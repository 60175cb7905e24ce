#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "semirings/semiring_census.hpp"

namespace semirings {

/// One census record, e.g. {"n":2,"add":[[0,0],[0,1]],"mul":[[0,0],[0,0]]}.
/// The bytes are deterministic for a given pair.
std::string record_line(const SemiringPair& pair);

std::string summary_line(uint64_t count);

/// Streams the census as JSONL records followed by a {"count":N} summary
/// line. Returns the number of records written.
uint64_t write_census_jsonl(const CensusQuery& q, const CensusOptions& options,
                            std::ostream& out);

struct CheckOutcome {
  uint64_t records = 0;    // parseable records seen
  uint64_t invalid = 0;    // records failing a semiring axiom
  uint64_t malformed = 0;  // unparseable or structurally bad lines
  bool ok() const { return invalid == 0 && malformed == 0; }
};

/// Validates a JSONL stream record by record, writing a per-line report and
/// a final summary. Malformed lines are reported with their line number and
/// do not abort the remaining lines. A {"count":N} trailer, when present, is
/// checked against the number of records seen.
CheckOutcome check_stream(std::istream& in, std::ostream& report);

}  // namespace semirings
