#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "folichar/session.hpp"

namespace folichar {

struct CommandOptions {
  std::string xi;  // --xi NAME
  std::optional<std::uint64_t> budget;
  int max_deg = 2;
  int max_cofactor = 1;
  std::string order = "grevlex";  // gb: lex | grevlex
  bool bernstein = false;         // symbol: --bernstein (default --order)
  bool prolonged = false;         // invariant: test under the prolongation
};

struct Report {
  nlohmann::json json;
  int exit_code = 0;  // 0 computed, 1 negative verdict, 2 input error, 3 budget

  // "key: value" lines carrying the same data as the JSON report.
  std::string human() const;
};

std::vector<std::string> command_names();

// Never throws: failures become a report with an "error" object.
Report run_command(const Session& session, const std::string& command,
                   const std::vector<std::string>& args, const CommandOptions& options = {});

// Parses the file text and runs the command; parse errors become reports.
Report run_file_command(const std::string& text, const std::string& command,
                        const std::vector<std::string>& args, const CommandOptions& options = {},
                        bool assume_irreducible = false);

nlohmann::json error_json(const std::exception& e);
int exit_code_for(const std::exception& e);

}  // namespace folichar
