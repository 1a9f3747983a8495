#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "macaulay/problem.hpp"

namespace macaulay::cli {

enum class Command { Basis, Reduce, Syzygy, Eliminate, Hilbert, Homogenize, Dehomogenize, CheckInvariant, Verify };

Command parse_command(std::string_view name);
std::string to_string(Command command);

struct CommandOptions {
  std::optional<std::string> coeff;
  std::optional<std::string> grading;
  bool reduced = false;
  bool certify = false;
  bool trace = false;
  bool timing = false;
  std::string format = "text";
  std::size_t max_iterations = 64;
  std::optional<std::int64_t> degree_cap;
  std::optional<std::string> keep;
  std::optional<std::string> var;
  std::optional<std::string> group;
  std::optional<std::string> degrees;
  std::optional<std::string> complement;
  std::optional<std::string> reduction;
  std::optional<std::string> element;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
};

struct ResultDocument {
  std::string command;
  std::string input_hash;
  nlohmann::ordered_json body;
  std::optional<double> seconds;
};

// FNV-1a over the raw problem text, as 16 hex digits.
std::string input_hash(std::string_view text);

// group_text is the contents of the group file, when one is needed.
ResultDocument run_command(Command command, const ProblemFile& problem, const CommandOptions& options,
                           std::string_view input_text, const std::optional<std::string>& group_text = std::nullopt);

std::string format_result(const ResultDocument& doc, std::string_view format);

enum ExitCode : int { Ok = 0, Failure = 1, Syntax = 2, Precondition = 3, Resource = 4 };

int exit_code(const std::exception& error);

// Full front end: argument parsing, file loading, dispatch and rendering.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace macaulay::cli
