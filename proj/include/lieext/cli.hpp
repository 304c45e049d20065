#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lieext/io.hpp"

namespace lieext {

inline constexpr const char* kToolName = "lieext";
inline constexpr const char* kToolVersion = "0.1.0";

struct CommandSpec {
  std::string subcommand;  // validate, info, decompose, canonical, casimirs, coextend, reduce, lift, oracle-verify, preset
  std::string algebra;     // path, "-" or preset:NAME
  std::string lie = "sl2";
  std::string casimir;     // path, empty if absent
  std::string preset_name;
  bool linear = false;
  bool quadratic = false;
  bool via_coextension = false;
  std::string cnn = "0";
  std::uint64_t seed = 0;
};

struct RunReport {
  std::string command;
  std::string status = "ok";  // ok | violation | error
  std::optional<std::string> error_code;
  std::string message;
  json payload = json::object();
  json inputs = json::array();
  int exit_code = 0;

  json to_json() const;
};

std::string sha256_hex(const std::string& data);

/// Never throws for library errors; they become status "error".
RunReport run(const CommandSpec& spec);

/// Argument parsing and output. Returns the process exit status.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lieext
