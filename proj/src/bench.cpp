#include "contextua/bench.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>

namespace contextua {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

bool is_ident(std::string_view t) {
    if (t.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(t[0])) && t[0] != '_') return false;
    for (char c : t)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::optional<long long> parse_int(std::string_view t) {
    if (t.empty()) return std::nullopt;
    long long v = 0;
    for (char c : t) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        v = v * 10 + (c - '0');
        if (v > 1000000) return std::nullopt;
    }
    return v;
}

// NUMBER := decimal | [sign][INT]"pi"["/"INT]
std::optional<Number> parse_number(std::string_view t) {
    if (t.empty()) return std::nullopt;
    std::string_view rest = t;
    long long sign = 1;
    if (rest.front() == '+' || rest.front() == '-') {
        if (rest.front() == '-') sign = -1;
        rest.remove_prefix(1);
        if (rest.empty()) return std::nullopt;
    }
    const std::size_t pi_pos = rest.find("pi");
    if (pi_pos != std::string_view::npos) {
        long long num = 1, den = 1;
        if (pi_pos > 0) {
            auto n = parse_int(rest.substr(0, pi_pos));
            if (!n) return std::nullopt;
            num = *n;
        }
        std::string_view tail = rest.substr(pi_pos + 2);
        if (!tail.empty()) {
            if (tail.front() != '/') return std::nullopt;
            auto d = parse_int(tail.substr(1));
            if (!d || *d == 0) return std::nullopt;
            den = *d;
        }
        return Number::pi_multiple(sign * num, den);
    }
    // plain decimal; the whole token must be consumed
    std::string buf(t);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
    return Number::decimal(v);
}

std::optional<Pol> parse_pol(std::string_view t) {
    if (t == "V") return Pol::V;
    if (t == "H") return Pol::H;
    return std::nullopt;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    BenchProgram run() {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            const std::size_t nl = text_.find('\n', pos);
            std::string_view line = (nl == std::string_view::npos)
                                        ? text_.substr(pos)
                                        : text_.substr(pos, nl - pos);
            ++line_no;
            if (nl == std::string_view::npos && line.empty() && pos == text_.size()) break;
            handle_line(line, line_no);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        if (!program_.source_line) {
            throw ParseError(1, 1, ErrorKind::Semantic, "missing source declaration");
        }
        return std::move(program_);
    }

  private:
    void handle_line(std::string_view line, int line_no) {
        // full-line comments only
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) return;
        if (line[first] == '#') return;
        const std::vector<Token> toks = split_tokens(line);
        for (const Token& t : toks) {
            if (t.text.find('#') != std::string::npos) {
                throw ParseError(line_no, t.column + static_cast<int>(t.text.find('#')),
                                 ErrorKind::Lex, "'#' starts a comment only at line start");
            }
        }
        const Token& kw = toks.front();
        if (kw.text == "source") {
            parse_source(toks, line_no);
        } else if (kw.text == "npbs") {
            parse_npbs(toks, line_no);
        } else if (kw.text == "qwp") {
            parse_qwp(toks, line_no);
        } else if (kw.text == "flip") {
            parse_flip(toks, line_no);
        } else if (kw.text == "ps") {
            parse_angle_stmt(toks, line_no, /*is_ps=*/true);
        } else if (kw.text == "pr") {
            parse_angle_stmt(toks, line_no, /*is_ps=*/false);
        } else {
            throw ParseError(line_no, kw.column, ErrorKind::Syntax,
                             "unknown keyword '" + kw.text + "'");
        }
    }

    void require_arity(const std::vector<Token>& toks, std::size_t n, int line_no,
                       const char* usage) {
        if (toks.size() != n) {
            const int col = (toks.size() > n) ? toks[n].column
                                              : toks.front().column +
                                                    static_cast<int>(toks.front().text.size());
            throw ParseError(line_no, col, ErrorKind::Syntax, std::string("expected: ") + usage);
        }
    }

    std::string expect_ident(const Token& t, int line_no) {
        if (!is_ident(t.text)) {
            throw ParseError(line_no, t.column, ErrorKind::Lex,
                             "expected path identifier, got '" + t.text + "'");
        }
        return t.text;
    }

    Pol expect_pol(const Token& t, int line_no) {
        auto p = parse_pol(t.text);
        if (!p) {
            throw ParseError(line_no, t.column, ErrorKind::Syntax,
                             "expected polarization V or H, got '" + t.text + "'");
        }
        return *p;
    }

    Number expect_number(const Token& t, int line_no) {
        auto n = parse_number(t.text);
        if (!n) {
            throw ParseError(line_no, t.column, ErrorKind::Lex,
                             "malformed number '" + t.text + "'");
        }
        return *n;
    }

    std::string expect_known_path(const Token& t, int line_no) {
        std::string label = expect_ident(t, line_no);
        if (label != path0_ && label != path1_) {
            throw ParseError(line_no, t.column, ErrorKind::Semantic,
                             "undeclared path '" + label + "'");
        }
        return label;
    }

    void require_source_first(const Token& kw, int line_no) {
        if (!program_.source_line) {
            throw ParseError(line_no, kw.column, ErrorKind::Semantic,
                             "missing source declaration before '" + kw.text + "'");
        }
    }

    void parse_source(const std::vector<Token>& toks, int line_no) {
        require_arity(toks, 4, line_no, "source IDENT V|H NUMBER");
        if (program_.source_line) {
            throw ParseError(line_no, toks[0].column, ErrorKind::Semantic,
                             "duplicate source declaration (first at line " +
                                 std::to_string(program_.source_line) + ")");
        }
        SourceDecl src;
        src.path = expect_ident(toks[1], line_no);
        src.pol = expect_pol(toks[2], line_no);
        src.intensity = expect_number(toks[3], line_no);
        if (src.intensity.value < 0.0) {
            throw ParseError(line_no, toks[3].column, ErrorKind::Semantic,
                             "intensity must be >= 0");
        }
        program_.source = std::move(src);
        program_.source_line = line_no;
        path0_ = program_.source.path;
    }

    void parse_npbs(const std::vector<Token>& toks, int line_no) {
        require_source_first(toks[0], line_no);
        require_arity(toks, 3, line_no, "npbs IDENT IDENT");
        NpbsStmt s;
        s.port1 = expect_known_path(toks[1], line_no);
        s.port2 = expect_ident(toks[2], line_no);
        if (s.port2 == s.port1) {
            throw ParseError(line_no, toks[2].column, ErrorKind::Semantic,
                             "npbs ports must be distinct paths");
        }
        if (s.port2 != path0_ && s.port2 != path1_) {
            if (!path1_.empty()) {
                throw ParseError(line_no, toks[2].column, ErrorKind::Semantic,
                                 "more than two paths ('" + path0_ + "', '" + path1_ +
                                     "' already declared)");
            }
            path1_ = s.port2;
        }
        push(std::move(s), line_no);
    }

    void parse_qwp(const std::vector<Token>& toks, int line_no) {
        require_source_first(toks[0], line_no);
        require_arity(toks, 3, line_no, "qwp IDENT fast=V|H");
        QwpStmt s;
        s.path = expect_known_path(toks[1], line_no);
        const std::string& axis = toks[2].text;
        if (axis.rfind("fast=", 0) != 0) {
            throw ParseError(line_no, toks[2].column, ErrorKind::Syntax,
                             "expected fast=V or fast=H, got '" + axis + "'");
        }
        auto p = parse_pol(axis.substr(5));
        if (!p) {
            throw ParseError(line_no, toks[2].column + 5, ErrorKind::Syntax,
                             "expected fast=V or fast=H, got '" + axis + "'");
        }
        s.fast = *p;
        push(std::move(s), line_no);
    }

    void parse_flip(const std::vector<Token>& toks, int line_no) {
        require_source_first(toks[0], line_no);
        require_arity(toks, 2, line_no, "flip IDENT");
        FlipStmt s;
        s.path = expect_known_path(toks[1], line_no);
        push(std::move(s), line_no);
    }

    void parse_angle_stmt(const std::vector<Token>& toks, int line_no, bool is_ps) {
        require_source_first(toks[0], line_no);
        require_arity(toks, 3, line_no, is_ps ? "ps IDENT NUMBER" : "pr IDENT NUMBER");
        const std::string path = expect_known_path(toks[1], line_no);
        const Number angle = expect_number(toks[2], line_no);
        if (is_ps) {
            push(PhaseStmt{path, angle}, line_no);
        } else {
            push(RotateStmt{path, angle}, line_no);
        }
    }

    void push(Statement s, int line_no) {
        program_.statements.push_back(std::move(s));
        program_.line_spans.push_back(line_no);
    }

    std::string_view text_;
    BenchProgram program_;
    std::string path0_;
    std::string path1_;
};

std::string pol_name(Pol p) { return p == Pol::V ? "V" : "H"; }

}  // namespace

Number Number::decimal(double v) {
    Number n;
    n.is_pi = false;
    n.value = v;
    return n;
}

Number Number::pi_multiple(long long num, long long den) {
    Number n;
    n.is_pi = true;
    n.num = num;
    n.den = den;
    n.value = static_cast<double>(num) * kPi / static_cast<double>(den);
    return n;
}

std::string Number::spell() const {
    if (!is_pi) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        return buf;
    }
    std::string s;
    long long n = num;
    if (n < 0) {
        s += "-";
        n = -n;
    }
    if (n != 1) s += std::to_string(n);
    s += "pi";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

BenchProgram parse(std::string_view text) { return Parser(text).run(); }

std::optional<Number> parse_number_literal(std::string_view text) { return parse_number(text); }

std::string format(const BenchProgram& p) {
    std::string out = "source " + p.source.path + " " + pol_name(p.source.pol) + " " +
                      p.source.intensity.spell() + "\n";
    for (const Statement& st : p.statements) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, NpbsStmt>) {
                    out += "npbs " + s.port1 + " " + s.port2;
                } else if constexpr (std::is_same_v<T, QwpStmt>) {
                    out += "qwp " + s.path + " fast=" + pol_name(s.fast);
                } else if constexpr (std::is_same_v<T, FlipStmt>) {
                    out += "flip " + s.path;
                } else if constexpr (std::is_same_v<T, PhaseStmt>) {
                    out += "ps " + s.path + " " + s.phi.spell();
                } else {
                    out += "pr " + s.path + " " + s.theta.spell();
                }
            },
            st);
        out += "\n";
    }
    return out;
}

CompiledBench compile(const BenchProgram& p) {
    // arm indices in order of introduction: the source path is arm 0
    std::string path0 = p.source.path;
    std::string path1;
    auto arm = [&](const std::string& label) { return label == path0 ? Path::A : Path::B; };

    CVec amps{cx{0.0}, cx{0.0}, cx{0.0}, cx{0.0}};
    amps[p.source.pol == Pol::V ? 0 : 1] = 1.0;
    BeamState input(std::move(amps), p.source.intensity.value);

    std::vector<OpticalOperator> pipeline;
    for (const Statement& st : p.statements) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, NpbsStmt>) {
                    if (path1.empty() && s.port2 != path0) path1 = s.port2;
                    pipeline.push_back(npbs());
                } else if constexpr (std::is_same_v<T, QwpStmt>) {
                    pipeline.push_back(lift_on_path(
                        s.fast == Pol::V ? qwp_fast_vertical() : qwp_fast_horizontal(),
                        arm(s.path), "qwp"));
                } else if constexpr (std::is_same_v<T, FlipStmt>) {
                    pipeline.push_back(lift_on_path(pol_flipper(), arm(s.path), "flip"));
                } else if constexpr (std::is_same_v<T, PhaseStmt>) {
                    CMat ps = (arm(s.path) == Path::B)
                                  ? phase_shifter(s.phi.value)
                                  : CMat{{std::polar(1.0, s.phi.value), 0.0}, {0.0, 1.0}};
                    pipeline.push_back(lift_path_space(ps, "ps"));
                } else {
                    pipeline.push_back(
                        lift_on_path(pol_rotator(s.theta.value), arm(s.path), "pr"));
                }
            },
            st);
    }
    return CompiledBench{std::move(input), std::move(pipeline)};
}

BeamState evaluate(const BenchProgram& p) {
    CompiledBench cb = compile(p);
    if (cb.pipeline.empty()) return cb.input;
    return apply(compose(cb.pipeline), cb.input);
}

}  // namespace contextua
