#include "semirings/jsonl.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace semirings {

namespace {

void append_table(std::string& out, const OpTable& t) {
  const int n = t.order();
  out += '[';
  for (int x = 0; x < n; ++x) {
    if (x) out += ',';
    out += '[';
    for (int y = 0; y < n; ++y) {
      if (y) out += ',';
      out += std::to_string(t.at(x, y));
    }
    out += ']';
  }
  out += ']';
}

}  // namespace

std::string record_line(const SemiringPair& pair) {
  std::string s = "{\"n\":" + std::to_string(pair.order()) + ",\"add\":";
  append_table(s, pair.add());
  s += ",\"mul\":";
  append_table(s, pair.mul());
  s += '}';
  return s;
}

std::string summary_line(uint64_t count) {
  return "{\"count\":" + std::to_string(count) + "}";
}

uint64_t write_census_jsonl(const CensusQuery& q, const CensusOptions& options,
                            std::ostream& out) {
  CensusOptions opts = options;
  opts.collect = false;
  uint64_t written = 0;
  opts.sink = [&](const SemiringPair& pair) {
    out << record_line(pair) << '\n';
    ++written;
  };
  enumerate_semirings(q, opts);
  out << summary_line(written) << '\n';
  return written;
}

namespace {

// Parses {"n":..., "add":[[...]], "mul":[[...]]} into tables; returns an
// error message instead for anything structurally off.
struct ParsedRecord {
  std::optional<SemiringPair> pair;  // unset: see error or count
  std::optional<uint64_t> count;
  std::string error;
  OpTable add{1};
  OpTable mul{1};
  bool has_tables = false;
};

OpTable table_from_json(const nlohmann::json& j, int n, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw std::invalid_argument(std::string(name) + " must be an n x n array");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<size_t>(n));
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument(std::string(name) +
                                  " must be an n x n array");
    }
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument(std::string(name) +
                                    " entries must be integers");
      }
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return OpTable::from_rows(rows);
}

ParsedRecord parse_line(const std::string& line) {
  ParsedRecord out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    out.error = std::string("parse error: ") + e.what();
    return out;
  }
  if (!j.is_object()) {
    out.error = "parse error: expected a JSON object";
    return out;
  }
  if (j.contains("count") && !j.contains("n")) {
    if (!j["count"].is_number_unsigned()) {
      out.error = "parse error: count must be a nonnegative integer";
      return out;
    }
    out.count = j["count"].get<uint64_t>();
    return out;
  }
  try {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
      throw std::invalid_argument("missing integer field n");
    }
    const int n = j["n"].get<int>();
    if (n < 1 || n > OpTable::kMaxOrder) {
      throw std::invalid_argument("n must be in [1, 8]");
    }
    if (!j.contains("add") || !j.contains("mul")) {
      throw std::invalid_argument("missing add or mul table");
    }
    out.add = table_from_json(j["add"], n, "add");
    out.mul = table_from_json(j["mul"], n, "mul");
    out.has_tables = true;
  } catch (const std::invalid_argument& e) {
    out.error = std::string("bad record: ") + e.what();
  }
  return out;
}

std::string witness_text(const LawCheck& l) {
  if (l.witness[2] < 0) {
    return "(x,y)=(" + std::to_string(l.witness[0]) + "," +
           std::to_string(l.witness[1]) + ")";
  }
  return "(x,y,z)=(" + std::to_string(l.witness[0]) + "," +
         std::to_string(l.witness[1]) + "," + std::to_string(l.witness[2]) +
         ")";
}

}  // namespace

CheckOutcome check_stream(std::istream& in, std::ostream& report) {
  CheckOutcome out;
  std::optional<uint64_t> declared_count;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const ParsedRecord rec = parse_line(line);
    if (!rec.error.empty()) {
      ++out.malformed;
      report << "line " << line_no << ": " << rec.error << '\n';
      continue;
    }
    if (rec.count) {
      declared_count = rec.count;
      continue;
    }
    ++out.records;
    const SemiringReport sr = verify_semiring(rec.add, rec.mul);
    if (sr.all_ok()) {
      report << "line " << line_no << ": ok\n";
    } else {
      ++out.invalid;
      const LawCheck* fail = sr.first_failure();
      report << "line " << line_no << ": invalid: " << fail->law
             << " fails at " << witness_text(*fail) << '\n';
    }
  }
  if (declared_count && *declared_count != out.records) {
    ++out.malformed;
    report << "summary count " << *declared_count << " does not match "
           << out.records << " records\n";
  }
  report << "checked " << out.records << " records: " << out.invalid
         << " invalid, " << out.malformed << " malformed\n";
  return out;
}

}  // namespace semirings
