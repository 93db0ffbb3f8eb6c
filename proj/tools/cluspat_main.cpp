#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include "cluspat/driver.hpp"

namespace {

using namespace cluspat;

IntMatrix load_matrix(const std::string& inline_json, const std::string& file) {
  std::string text = inline_json;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InvalidArgument("cannot open matrix file: " + file);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (text.empty()) throw InvalidArgument("no matrix given; use --matrix or --matrix-file");
  nlohmann::json j = nlohmann::json::parse(text);
  return matrix_from_json_flexible(j);
}

void emit(const nlohmann::json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // Compact text rendering: walk top-level scalars, print matrices as rows.
  std::function<void(const nlohmann::json&, int)> walk = [&](const nlohmann::json& j, int depth) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
      for (const auto& [key, value] : j.items()) {
        if (value.is_object() && value.contains("entries")) {
          std::cout << pad << key << ":\n";
          for (const auto& row : value["entries"]) std::cout << pad << "  " << row.dump() << "\n";
        } else if (value.is_structured()) {
          std::cout << pad << key << ":\n";
          walk(value, depth + 1);
        } else {
          std::cout << pad << key << ": " << value.dump() << "\n";
        }
      }
    } else if (j.is_array()) {
      for (const auto& item : j) {
        if (item.is_structured()) {
          std::cout << pad << "-\n";
          walk(item, depth + 1);
        } else {
          std::cout << pad << "- " << item.dump() << "\n";
        }
      }
    } else {
      std::cout << pad << j.dump() << "\n";
    }
  };
  walk(report, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for cluster-algebra seed patterns: C-, G-, F-, H-matrices and "
               "F-polynomials under final-seed and initial-seed mutations"};
  app.require_subcommand(1);

  if (const char* limit = std::getenv("CLUSPAT_TERM_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(limit, &end, 10);
    if (end && *end == '\0' && v > 0) cluspat::set_term_limit(static_cast<std::size_t>(v));
  }

  std::string matrix_json, matrix_file, walk_text, format = "json";
  bool checked = false;

  auto* mutate = app.add_subcommand("mutate", "walk a pattern and dump the resulting node");
  mutate->add_option("--matrix", matrix_json, "initial exchange matrix as JSON rows");
  mutate->add_option("--matrix-file", matrix_file, "file containing the matrix JSON");
  mutate->add_option("--walk", walk_text, "comma-separated 1-based directions, e.g. 2,1,2");
  mutate->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  mutate->add_flag("--checked", checked, "assert every redundant recursion variant per step");
  std::string semifield_name;
  mutate->add_option("--semifield", semifield_name,
                     "also emit cluster variables and coefficients over this semifield")
      ->check(CLI::IsMember({"tropical", "tropical-inverted", "universal", "unit"}));

  int max_walk_len = 4;
  auto* duality = app.add_subcommand(
      "check-duality", "verify transposition dualities and initial-seed transforms over all "
                       "walks up to a length");
  duality->add_option("--matrix", matrix_json, "initial exchange matrix as JSON rows");
  duality->add_option("--matrix-file", matrix_file, "file containing the matrix JSON");
  duality->add_option("--max-walk-len", max_walk_len, "walk length bound")
      ->check(CLI::Range(0, 12));
  duality->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* extend_cmd =
      app.add_subcommand("extend", "build the full extension of B and verify its block identities");
  extend_cmd->add_option("--matrix", matrix_json, "initial exchange matrix as JSON rows");
  extend_cmd->add_option("--matrix-file", matrix_file, "file containing the matrix JSON");
  extend_cmd->add_option("--walk", walk_text, "walk for the block verification (directions <= n)");
  extend_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* tables = app.add_subcommand("tables-a2", "reproduce the type-A2 tables");
  tables->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  cluspat::SuiteConfig suite_config;
  auto* suite = app.add_subcommand("random-suite", "seeded randomized identity suite");
  suite->add_option("--cases", suite_config.cases, "number of cases")->check(CLI::Range(0, 100000));
  suite->add_option("--rank", suite_config.rank_max, "maximum rank (minimum stays 2)")
      ->check(CLI::Range(1, 8));
  suite->add_option("--max-entry", suite_config.max_entry, "entry bound")->check(CLI::Range(1, 6));
  suite->add_option("--max-walk-len", suite_config.max_walk_len, "walk length bound")
      ->check(CLI::Range(0, 16));
  suite->add_option("--seed", suite_config.seed, "random seed (recorded in the report)");
  suite->add_option("--zero-column-percent", suite_config.zero_column_percent,
                    "share of cases with a disconnected index")
      ->check(CLI::Range(0, 100));
  suite->add_option("--scale-percent", suite_config.scale_percent,
                    "share of cases with scaled columns (D != I)")
      ->check(CLI::Range(0, 100));
  suite->add_option("--support-cap", suite_config.support_cap,
                    "F-polynomial support-box bound used to truncate sampled walks")
      ->check(CLI::Range(1L, 100000000L));
  suite->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cluspat::kExitOk : cluspat::kExitUsage;
  }

  try {
    nlohmann::json report;
    if (mutate->parsed()) {
      MutateConfig config{load_matrix(matrix_json, matrix_file), Walk::parse(walk_text),
                          checked ? VerifyLevel::checked : VerifyLevel::fast, std::nullopt};
      if (!semifield_name.empty()) {
        if (semifield_name == "tropical") config.semifield = SemifieldKind::tropical;
        else if (semifield_name == "tropical-inverted")
          config.semifield = SemifieldKind::tropical_inverted;
        else if (semifield_name == "universal") config.semifield = SemifieldKind::universal;
        else config.semifield = SemifieldKind::one_element;
      }
      report = cmd_mutate(config);
      emit(report, format);
      return cluspat::kExitOk;  // walk errors surface as exceptions
    }
    if (duality->parsed()) {
      DualityConfig config{load_matrix(matrix_json, matrix_file), max_walk_len};
      report = cmd_check_duality(config);
    } else if (extend_cmd->parsed()) {
      ExtendConfig config{load_matrix(matrix_json, matrix_file), std::nullopt};
      if (!walk_text.empty()) config.walk = Walk::parse(walk_text);
      report = cmd_extend(config);
    } else if (tables->parsed()) {
      report = cmd_tables_a2();
    } else if (suite->parsed()) {
      if (suite_config.rank_max < suite_config.rank_min)
        suite_config.rank_min = suite_config.rank_max;
      report = cmd_random_suite(suite_config);
    }
    emit(report, format);
    return report_passed(report) ? cluspat::kExitOk : cluspat::kExitVerification;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cluspat::kExitUsage;
  } catch (const NotSkewSymmetrizable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cluspat::kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cluspat::kExitUsage;
  } catch (const Error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return cluspat::kExitVerification;
  }
}
