// Command-line front end for the semiring census engine.
//
// Subcommands:
//   count      print the number of semirings matching a query
//   table      reproduce one of the four reference tables
//   enumerate  stream the census as JSONL records
//   check      validate externally supplied (add, mul) table pairs
//
// Exit codes: 0 success, 1 validation failures, 2 usage/I-O error,
// 3 capability error (query outside the supported census range).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "semirings/jsonl.hpp"
#include "semirings/semiring_census.hpp"
#include "semirings/table_report.hpp"
#include "semirings/version.hpp"

namespace {

using namespace semirings;

struct CommonArgs {
  int threads = 1;
  std::string cache_dir;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--threads", args.threads, "worker threads for the sweep")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--cache-dir", args.cache_dir,
                  "directory for semigroup census cache files")
      ->envname("SEMIRINGS_CACHE_DIR");
}

CensusOptions census_options(const CommonArgs& args) {
  CensusOptions opts;
  opts.threads = args.threads;
  if (!args.cache_dir.empty()) opts.cache_dir = args.cache_dir;
  return opts;
}

struct QueryArgs {
  int order = 1;
  std::string equiv = "iso";
  bool with_zero = false;
  bool with_one = false;
  bool ai = false;
  bool commutative = false;
};

void add_query(CLI::App* cmd, QueryArgs& args) {
  cmd->add_option("--order,-n", args.order, "number of elements")
      ->required()
      ->check(CLI::Range(1, 8));
  cmd->add_option("--equiv", args.equiv,
                  "equivalence: iso (isomorphism) or anti (isomorphism or "
                  "anti-isomorphism)")
      ->check(CLI::IsMember({"iso", "anti"}));
  cmd->add_flag("--with-zero", args.with_zero,
                "require an additive identity that multiplication absorbs");
  cmd->add_flag("--with-one", args.with_one,
                "require a multiplicative identity");
  cmd->add_flag("--ai", args.ai, "require x + x = x (additive idempotency)");
  cmd->add_flag("--commutative", args.commutative,
                "require commutative multiplication");
}

CensusQuery to_query(const QueryArgs& args) {
  CensusQuery q;
  q.n = args.order;
  q.equiv = args.equiv == "iso" ? EquivMode::iso : EquivMode::iso_or_anti;
  q.filter = CensusFilter{args.with_zero, args.with_one, args.ai,
                          args.commutative};
  return q;
}

int run_count(const QueryArgs& qargs, const CommonArgs& cargs) {
  const CensusResult r =
      enumerate_semirings(to_query(qargs), census_options(cargs));
  std::cout << "count: " << r.count << '\n'
            << "additive classes visited: " << r.provenance.additive_classes
            << '\n'
            << "multiplicative classes visited: "
            << r.provenance.multiplicative_classes << '\n'
            << "double cosets tested: " << r.provenance.cosets_tested << '\n'
            << "distributive hits: " << r.provenance.distributive_hits
            << '\n';
  return 0;
}

int write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return 0;
  }
  const std::filesystem::path target(out_path);
  const std::filesystem::path tmp(out_path + ".tmp");
  std::ofstream f(tmp, std::ios::trunc);
  if (!f || !(f << content) || !f.flush()) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    std::cerr << "error: cannot write " << out_path << '\n';
    return 2;
  }
  f.close();
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    std::cerr << "error: cannot write " << out_path << ": " << ec.message()
              << '\n';
    return 2;
  }
  return 0;
}

int run_table(int table_id, int max_order, const std::string& format,
              const std::string& out_path, const CommonArgs& cargs) {
  const TableDocument doc =
      reproduce_table(table_id, max_order, census_options(cargs));
  return write_output(out_path,
                      format == "csv" ? doc.to_csv() : doc.to_markdown());
}

int run_enumerate(const QueryArgs& qargs, const std::string& out_path,
                  const CommonArgs& cargs) {
  const CensusQuery q = to_query(qargs);
  const CensusOptions opts = census_options(cargs);
  if (out_path.empty()) {
    write_census_jsonl(q, opts, std::cout);
    return 0;
  }
  const std::filesystem::path target(out_path);
  const std::filesystem::path tmp(out_path + ".tmp");
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
    try {
      write_census_jsonl(q, opts, f);
    } catch (...) {
      f.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw;
    }
    if (!f.flush()) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      std::cerr << "error: failed while writing " << out_path << '\n';
      return 2;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    std::cerr << "error: cannot write " << out_path << ": " << ec.message()
              << '\n';
    return 2;
  }
  return 0;
}

int run_check(const std::string& in_path) {
  std::ifstream f(in_path);
  if (!f) {
    std::cerr << "error: cannot open " << in_path << '\n';
    return 2;
  }
  const CheckOutcome outcome = check_stream(f, std::cout);
  return outcome.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of finite semirings: count, enumerate and validate "
               "(addition, multiplication) table pairs up to isomorphism or "
               "up to isomorphism and anti-isomorphism."};
  app.set_version_flag("--version", semirings::kEngineVersion);
  app.require_subcommand(1);

  QueryArgs count_query;
  CommonArgs count_common;
  CLI::App* count =
      app.add_subcommand("count", "print the number of semirings for a query");
  add_query(count, count_query);
  add_common(count, count_common);

  int table_id = 1;
  int max_order = 4;
  std::string table_format = "markdown";
  std::string table_out;
  CommonArgs table_common;
  CLI::App* table =
      app.add_subcommand("table", "reproduce one of the reference tables");
  table->add_option("--table", table_id, "table id: 1 semirings, 2 "
                                         "commutative, 3 ai, 4 commutative ai")
      ->required()
      ->check(CLI::Range(1, 4));
  table->add_option("--max-order", max_order, "largest order to compute")
      ->check(CLI::Range(1, 8));
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  table->add_option("--out", table_out, "output path (default: stdout)");
  add_common(table, table_common);

  QueryArgs enum_query;
  std::string enum_out;
  std::string enum_format = "jsonl";
  CommonArgs enum_common;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "stream the census as JSONL records");
  add_query(enumerate, enum_query);
  enumerate->add_option("--out", enum_out, "output path (default: stdout)");
  enumerate->add_option("--format", enum_format, "output format")
      ->check(CLI::IsMember({"jsonl"}));
  add_common(enumerate, enum_common);

  std::string check_in;
  CLI::App* check = app.add_subcommand(
      "check", "validate a JSONL file of (add, mul) table pairs");
  check->add_option("input", check_in, "JSONL file to validate")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(count)) return run_count(count_query, count_common);
    if (app.got_subcommand(table)) {
      return run_table(table_id, max_order, table_format, table_out,
                       table_common);
    }
    if (app.got_subcommand(enumerate)) {
      return run_enumerate(enum_query, enum_out, enum_common);
    }
    if (app.got_subcommand(check)) return run_check(check_in);
  } catch (const semirings::capability_error& e) {
    std::cerr << "capability error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
