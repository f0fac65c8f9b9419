#pragma once

#include "neutro/dsl/evaluator.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace neutro::cli {

enum class Command { eval, repl, classify };
enum class OutputFormat { table, json };

struct CliConfig {
    Command command = Command::eval;
    std::optional<std::string> input_path;    // eval
    std::array<std::string, 3> components{};  // classify: T, I, F literals
    OutputFormat format = OutputFormat::table;
    bool strict_literals = true;
};

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_syntax = 1;     // lex/parse diagnostic, bad classify literal
inline constexpr int exit_evaluation = 2; // evaluation diagnostic, unreadable file, bad usage

// Human-readable rendering of one statement result (one or more lines, each
// ending in '\n').
[[nodiscard]] std::string render_table(const dsl::Result &r);

// {"line", "statement", "subject", "kind", "value"}; set values use the
// neutroset document layout from serialize.hpp.
[[nodiscard]] nlohmann::json render_json(const dsl::Result &r);
[[nodiscard]] nlohmann::json render_json(const Classification &c);

// Evaluates script text; `file` labels diagnostics ("file:line:col: message").
int run_source(std::string_view source, std::string_view file, OutputFormat format,
               bool strict_literals, std::ostream &out, std::ostream &err);

int run_eval(const std::string &path, OutputFormat format, bool strict_literals,
             std::ostream &out, std::ostream &err);

// One statement per line; "exit" or end of input ends the session with 0.
// Errors are reported and the session continues.
int run_repl(std::istream &in, std::ostream &out, std::ostream &err, bool prompt,
             bool strict_literals = true);

int run_classify(std::string_view t, std::string_view i, std::string_view f,
                 OutputFormat format, bool strict_literals, std::ostream &out,
                 std::ostream &err);

// Parses argv and dispatches to one of the run_* functions.
int main_entry(int argc, const char *const *argv, std::istream &in, std::ostream &out,
               std::ostream &err, bool interactive);

} // namespace neutro::cli
