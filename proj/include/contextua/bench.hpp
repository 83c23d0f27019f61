// Line-oriented bench description format (.bench): one source declaration
// followed by element statements, compiled to an input state plus an ordered
// operator pipeline. `#` lines are comments. Angles take symbolic pi literals
// ("pi/4", "-pi/4", "2pi") or plain decimals.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "contextua/elements.hpp"
#include "contextua/states.hpp"

namespace contextua {

enum class Pol { V, H };

enum class ErrorKind { Lex, Syntax, Semantic };

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, ErrorKind kind, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          kind_(kind),
          message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    ErrorKind kind() const { return kind_; }
    const std::string& message() const { return message_; }

  private:
    int line_;
    int column_;
    ErrorKind kind_;
    std::string message_;
};

/// A numeric literal, kept symbolic when written as a pi multiple so that
/// formatting round-trips and the compiled angle is exact.
struct Number {
    bool is_pi = false;
    long long num = 0;  // signed multiplier when is_pi
    long long den = 1;
    double value = 0.0;

    static Number decimal(double v);
    static Number pi_multiple(long long num, long long den);

    std::string spell() const;

    bool operator==(const Number&) const = default;
};

struct SourceDecl {
    std::string path;
    Pol pol;
    Number intensity;
    bool operator==(const SourceDecl&) const = default;
};
struct NpbsStmt {
    std::string port1, port2;
    bool operator==(const NpbsStmt&) const = default;
};
struct QwpStmt {
    std::string path;
    Pol fast;
    bool operator==(const QwpStmt&) const = default;
};
struct FlipStmt {
    std::string path;
    bool operator==(const FlipStmt&) const = default;
};
struct PhaseStmt {
    std::string path;
    Number phi;
    bool operator==(const PhaseStmt&) const = default;
};
struct RotateStmt {
    std::string path;
    Number theta;
    bool operator==(const RotateStmt&) const = default;
};

using Statement = std::variant<NpbsStmt, QwpStmt, FlipStmt, PhaseStmt, RotateStmt>;

struct BenchProgram {
    SourceDecl source;
    std::vector<Statement> statements;
    int source_line = 0;
    std::vector<int> line_spans;  // one source line number per statement

    bool operator==(const BenchProgram& o) const {
        return source == o.source && statements == o.statements;
    }
};

/// Throws ParseError with 1-based line/column on any lex, syntax or semantic fault.
BenchProgram parse(std::string_view text);

/// Standalone NUMBER literal parser ("pi/4", "-pi/4", "2pi", "0.25", ...);
/// empty optional on malformed input. Also used for CLI angle flags.
std::optional<Number> parse_number_literal(std::string_view text);

/// Canonical pretty-print; comments are dropped, symbolic angles preserved.
/// parse(format(p)) is structurally equal to p.
std::string format(const BenchProgram& p);

struct CompiledBench {
    BeamState input;
    std::vector<OpticalOperator> pipeline;
};

/// The source becomes the input state; each statement becomes its element
/// operator. Path labels map to arms in order of introduction (source first).
CompiledBench compile(const BenchProgram& p);

/// compile + compose + apply in one step (input returned unchanged for an
/// empty pipeline).
BeamState evaluate(const BenchProgram& p);

}  // namespace contextua
