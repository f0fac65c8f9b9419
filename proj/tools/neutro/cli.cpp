#include "cli.hpp"

#include "neutro/dsl/format.hpp"
#include "neutro/dsl/parser.hpp"
#include "neutro/error.hpp"
#include "neutro/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace neutro::cli {

using nlohmann::json;

namespace {

int exit_code_for(dsl::Stage stage) {
    return stage == dsl::Stage::evaluate ? exit_evaluation : exit_syntax;
}

// Left-aligned columns separated by two spaces, each row indented by two.
std::string render_rows(const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> widths;
    for (const auto &row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto &row : rows) {
        std::string line = "  ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

std::string set_table(const NeutroSet &s) {
    std::vector<std::vector<std::string>> rows{{"element", "T", "I", "F"}};
    for (const auto &name : s.universe()) {
        const auto &x = s.at(name);
        rows.push_back({name, dsl::format(x.truth()), dsl::format(x.indeterminacy()),
                        dsl::format(x.falsity())});
    }
    return render_rows(rows);
}

std::string product_table(const CartesianProduct &p) {
    std::vector<std::vector<std::string>> rows{{"left", "right", "left (T, I, F)", "right (T, I, F)"}};
    for (const auto &pair : p.pairs) {
        rows.push_back({pair.first.name, pair.second.name, dsl::format(pair.first.triple),
                        dsl::format(pair.second.triple)});
    }
    return render_rows(rows);
}

json element_json(const Element &e) { return json{{"element", e.name}, {"triple", to_json(e.triple)}}; }

std::string read_file(std::ifstream &in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::string render_table(const dsl::Result &r) {
    return std::visit(
        [&](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NeutroSet>) {
                return r.subject + ":\n" + set_table(v);
            } else if constexpr (std::is_same_v<T, CartesianProduct>) {
                return r.subject + ":\n" + product_table(v);
            } else {
                return r.subject + ": " + dsl::format(v) + "\n";
            }
        },
        r.value);
}

json render_json(const Classification &c) {
    json labels = json::array();
    for (auto l : c.labels()) labels.push_back(std::string(name(l)));
    json flags = json::array();
    for (auto f : c.flags()) flags.push_back(std::string(name(f)));
    return json{{"labels", std::move(labels)}, {"flags", std::move(flags)}};
}

json render_json(const dsl::Result &r) {
    json out{{"line", r.line}, {"statement", r.statement}, {"subject", r.subject}};
    std::visit(
        [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NeutroSet>) {
                out["kind"] = "set";
                out["value"] = to_json(v);
            } else if constexpr (std::is_same_v<T, CartesianProduct>) {
                json pairs = json::array();
                for (const auto &p : v.pairs) {
                    pairs.push_back(json{{"left", element_json(p.first)}, {"right", element_json(p.second)}});
                }
                out["kind"] = "product";
                out["value"] = json{{"pairs", std::move(pairs)}};
            } else if constexpr (std::is_same_v<T, NeutroTriple>) {
                out["kind"] = "triple";
                out["value"] = to_json(v);
            } else if constexpr (std::is_same_v<T, Classification>) {
                out["kind"] = "classification";
                out["value"] = render_json(v);
            } else {
                out["kind"] = "check";
                out["value"] = v;
            }
        },
        r.value);
    return out;
}

int run_source(std::string_view source, std::string_view file, OutputFormat format,
               bool strict_literals, std::ostream &out, std::ostream &err) {
    dsl::Script script;
    try {
        script = dsl::parse_source(source);
    } catch (const dsl::DiagnosticError &e) {
        err << dsl::render(e.diagnostic(), file) << "\n";
        return exit_code_for(e.stage());
    }

    dsl::Session session({strict_literals});
    json results = json::array();
    int code = exit_ok;
    for (const auto &stmt : script.statements) {
        try {
            auto r = session.execute(stmt);
            if (!r) continue;
            if (format == OutputFormat::json) {
                results.push_back(render_json(*r));
            } else {
                out << render_table(*r);
            }
        } catch (const dsl::DiagnosticError &e) {
            err << dsl::render(e.diagnostic(), file) << "\n";
            code = exit_code_for(e.stage());
            break;
        }
    }
    if (format == OutputFormat::json) out << results.dump(2) << "\n";
    return code;
}

int run_eval(const std::string &path, OutputFormat format, bool strict_literals,
             std::ostream &out, std::ostream &err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << path << ": cannot open file\n";
        return exit_evaluation;
    }
    return run_source(read_file(in), path, format, strict_literals, out, err);
}

int run_repl(std::istream &in, std::ostream &out, std::ostream &err, bool prompt,
             bool strict_literals) {
    dsl::Session session({strict_literals});
    std::string line;
    std::size_t line_no = 0;
    while (true) {
        if (prompt) out << "ns> " << std::flush;
        if (!std::getline(in, line)) break;
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        const auto last = line.find_last_not_of(" \t\r");
        if (first != std::string::npos && line.substr(first, last - first + 1) == "exit") {
            return exit_ok;
        }
        try {
            const auto script = dsl::parse_source(line);
            for (const auto &stmt : script.statements) {
                if (auto r = session.execute(stmt)) out << render_table(*r);
            }
        } catch (const dsl::DiagnosticError &e) {
            auto d = e.diagnostic();
            d.line = line_no;
            err << dsl::render(d, "<stdin>") << "\n";
        }
    }
    return exit_ok;
}

int run_classify(std::string_view t, std::string_view i, std::string_view f,
                 OutputFormat format, bool strict_literals, std::ostream &out,
                 std::ostream &err) {
    const std::array<std::pair<std::string_view, std::string_view>, 3> literals{
        {{"T", t}, {"I", i}, {"F", f}}};
    std::vector<IntervalUnion> parts;
    for (const auto &[label, text] : literals) {
        try {
            parts.push_back(dsl::parse_component(text));
        } catch (const dsl::DiagnosticError &e) {
            err << dsl::render(e.diagnostic(), label) << "\n";
            return exit_syntax;
        }
    }

    std::optional<NeutroTriple> triple;
    if (strict_literals) {
        try {
            triple = NeutroTriple::strict(parts[0], parts[1], parts[2]);
        } catch (const Error &e) {
            err << "classify: " << e.what() << "\n";
            return exit_syntax;
        }
    } else {
        triple = NeutroTriple::clamped(parts[0], parts[1], parts[2]);
    }

    const auto c = classify_triple(*triple);
    if (format == OutputFormat::json) {
        json doc{{"kind", "classification"},
                 {"subject", dsl::format(*triple)},
                 {"value", render_json(c)}};
        out << doc.dump(2) << "\n";
    } else {
        out << to_string(c) << "\n";
    }
    return exit_ok;
}

int main_entry(int argc, const char *const *argv, std::istream &in, std::ostream &out,
               std::ostream &err, bool interactive) {
    CLI::App app{"Neutrosophic set calculator", "neutro"};
    app.require_subcommand(1);

    CliConfig config;
    const std::map<std::string, OutputFormat> formats{{"table", OutputFormat::table},
                                                     {"json", OutputFormat::json}};
    bool clamp_literals = false;

    auto *eval = app.add_subcommand("eval", "Evaluate a .ns script");
    std::string path;
    eval->add_option("file", path, "Script file")->required();
    eval->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    eval->add_flag("--clamp-literals", clamp_literals,
                   "Clamp out-of-range literal endpoints instead of rejecting them");

    auto *repl = app.add_subcommand("repl", "Interactive session, one statement per line");
    repl->add_flag("--clamp-literals", clamp_literals,
                   "Clamp out-of-range literal endpoints instead of rejecting them");

    auto *classify = app.add_subcommand("classify", "Classify a single (T, I, F) triple");
    classify->add_option("T", config.components[0], "Truth component")->required();
    classify->add_option("I", config.components[1], "Indeterminacy component")->required();
    classify->add_option("F", config.components[2], "Falsity component")->required();
    classify->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    classify->add_flag("--clamp-literals", clamp_literals,
                       "Clamp out-of-range literal endpoints instead of rejecting them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_evaluation;
    }
    config.strict_literals = !clamp_literals;

    if (eval->parsed()) {
        config.command = Command::eval;
        config.input_path = path;
        return run_eval(*config.input_path, config.format, config.strict_literals, out, err);
    }
    if (repl->parsed()) {
        config.command = Command::repl;
        return run_repl(in, out, err, interactive, config.strict_literals);
    }
    config.command = Command::classify;
    return run_classify(config.components[0], config.components[1], config.components[2],
                        config.format, config.strict_literals, out, err);
}

} // namespace neutro::cli
