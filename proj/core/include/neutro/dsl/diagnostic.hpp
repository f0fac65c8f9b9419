#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace neutro::dsl {

struct Position {
    std::size_t line = 1;   // 1-based
    std::size_t column = 1; // 1-based, counted in code points

    friend bool operator==(const Position &, const Position &) = default;
};

enum class Severity { error, warning };

struct Diagnostic {
    std::size_t line = 1;
    std::size_t column = 1;
    std::string message;
    Severity severity = Severity::error;
};

// "file:line:col: message"
[[nodiscard]] std::string render(const Diagnostic &d, std::string_view file);

// Which stage produced a diagnostic; the CLI maps this to its exit code.
enum class Stage { lex, parse, evaluate };

class DiagnosticError : public std::runtime_error {
public:
    DiagnosticError(Stage stage, Diagnostic d)
        : std::runtime_error(d.message), stage_(stage), diagnostic_(std::move(d)) {}
    DiagnosticError(Stage stage, Position at, std::string message)
        : DiagnosticError(stage, Diagnostic{at.line, at.column, std::move(message)}) {}

    [[nodiscard]] Stage stage() const noexcept { return stage_; }
    [[nodiscard]] const Diagnostic &diagnostic() const noexcept { return diagnostic_; }

private:
    Stage stage_;
    Diagnostic diagnostic_;
};

} // namespace neutro::dsl
