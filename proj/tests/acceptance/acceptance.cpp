// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include "cli.hpp"

#include "neutro/dsl/format.hpp"
#include "neutro/dsl/parser.hpp"
#include "neutro/serialize.hpp"
#include "neutro/taxonomy.hpp"

#include "fuzz.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace neutro;
using neutro::testing::Rng;

namespace {

// Pinned tolerances.
constexpr double endpoint_tol = 1e-12;
constexpr double assoc_tol = 1e-9;
constexpr double grid_step = 1e-3;
constexpr double oracle_tol = grid_step;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

int failures = 0;

void report(int n, std::string_view title, const std::function<Outcome()> &body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o.pass = false;
        o.detail = std::string("unexpected exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << n << " " << title << " - " << o.detail
              << " (" << ms << " ms)\n";
    if (!o.pass) ++failures;
}

std::string str(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

IntervalUnion iv(double lo, double hi) { return IntervalUnion{lo, hi}; }

IntervalUnion points(std::initializer_list<double> xs) {
    std::vector<Interval> raw;
    for (double x : xs) raw.push_back({x, x});
    return IntervalUnion::canonicalize(std::move(raw));
}

NeutroTriple worked_y() {
    return NeutroTriple::strict(iv(0.20, 0.30),
                                IntervalUnion::canonicalize({{0.40, 0.45}, {0.50, 0.51}}),
                                points({0.20, 0.24, 0.28}));
}

bool close(const NonStdValue &a, double standard, double tol) {
    return std::abs(a.standard() - standard) <= tol && a.coeff() == 0.0;
}

bool within_unit(const IntervalUnion &s) {
    return NonStdValue::zero_minus() <= s.inf() && s.sup() <= NonStdValue::one_plus();
}

bool within_unit(const NeutroTriple &x) {
    return within_unit(x.truth()) && within_unit(x.indeterminacy()) && within_unit(x.falsity());
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome ac1() {
    Outcome o;
    const auto x = classify_triple(NeutroTriple::point(0.5, 0.2, 0.3));
    o.require(x.has(Label::ifs_consistent), "x(0.5,0.2,0.3) lacks ifs_consistent");

    const auto y = worked_y();
    const auto yb = n_bounds(y);
    o.require(classify_triple(y).has(Label::paraconsistent), "y lacks paraconsistent");
    o.require(close(yb.n_sup, 1.09, endpoint_tol), "y n_sup = " + str(yb.n_sup.standard()));

    const auto z = NeutroTriple::point(0.1, 0.3, 0.4);
    const auto zb = n_bounds(z);
    o.require(classify_triple(z).has(Label::intuitionistic_incomplete),
              "z lacks intuitionistic_incomplete");
    o.require(close(zb.n_inf, 0.8, endpoint_tol) && close(zb.n_sup, 0.8, endpoint_tol),
              "z n = " + str(zb.n_sup.standard()));
    if (o.pass) {
        o.detail = "y n_sup=" + str(yb.n_sup.standard()) + ", z n=" + str(zb.n_sup.standard()) +
                   ", tol 1e-12";
    }
    return o;
}

Outcome ac2() {
    Outcome o;
    Rng rng(20001);
    int mul_checked = 0;
    for (int k = 0; k < 1000; ++k) {
        const auto a = testing::standard_union(rng);
        const auto b = testing::standard_union(rng);
        const auto sum = a + b;
        o.require(sum.inf() == a.inf() + b.inf() && sum.sup() == a.sup() + b.sup(),
                  "addition bounds differ at case " + std::to_string(k));
        const auto diff = a - b;
        o.require(diff.inf() == a.inf() - b.sup() && diff.sup() == a.sup() - b.inf(),
                  "subtraction bounds differ at case " + std::to_string(k));
        // Endpoints are drawn from [0, 1], so every case is non-negative.
        const auto prod = a * b;
        o.require(approx_equal(prod.inf(), a.inf() * b.inf(), endpoint_tol) &&
                      approx_equal(prod.sup(), a.sup() * b.sup(), endpoint_tol),
                  "multiplication bounds differ at case " + std::to_string(k));
        ++mul_checked;
    }
    if (o.pass) {
        o.detail = "1000 cases; add/sub bounds bit-exact, mul within 1e-12 on " +
                   std::to_string(mul_checked) + " non-negative cases";
    }
    return o;
}

Outcome ac3() {
    Outcome o;
    Rng rng(30001);
    // Endpoints on a 0.05 grid keep every true gap either zero or wider than
    // the oracle's two-bucket resolution.
    const auto grid_union = [&] {
        return testing::union_of(rng, [](Rng &r) { return NonStdValue{testing::on_grid(r, 0.05)}; });
    };
    const auto raw = [](const IntervalUnion &s) {
        testing::RawUnion out;
        for (const auto &p : s.parts()) out.emplace_back(p.lo.standard(), p.hi.standard());
        return out;
    };
    double worst = 0.0;
    int boundaries = 0;
    for (int k = 0; k < 100; ++k) {
        const auto a = grid_union();
        const auto b = grid_union();
        const std::array<std::pair<const char *, std::function<double(double, double)>>, 3> ops{{
            {"add", [](double p, double q) { return p + q; }},
            {"sub", [](double p, double q) { return p - q; }},
            {"mul", [](double p, double q) { return p * q; }},
        }};
        const std::array<IntervalUnion, 3> got{a + b, a - b, a * b};
        for (std::size_t j = 0; j < 3; ++j) {
            std::vector<testing::Cluster> impl;
            for (const auto &p : got[j].parts()) impl.push_back({p.lo.standard(), p.hi.standard()});
            impl = testing::coarsen(impl, 2 * grid_step);
            const auto oracle = testing::dense_image(raw(a), raw(b), ops[j].second, grid_step);
            const std::string where = std::string(ops[j].first) + " case " + std::to_string(k);
            o.require(impl.size() == oracle.size(), where + ": part count " +
                                                        std::to_string(impl.size()) + " vs oracle " +
                                                        std::to_string(oracle.size()));
            if (impl.size() != oracle.size()) continue;
            for (std::size_t m = 0; m < impl.size(); ++m) {
                const double d = std::max(std::abs(impl[m].lo - oracle[m].lo),
                                          std::abs(impl[m].hi - oracle[m].hi));
                worst = std::max(worst, d);
                boundaries += 2;
                o.require(d <= oracle_tol, where + ": boundary off by " + str(d));
            }
        }
    }
    if (o.pass) {
        o.detail = "300 operations, " + std::to_string(boundaries) +
                   " boundaries, max deviation " + str(worst) + " <= 1e-3";
    }
    return o;
}

Outcome ac4() {
    Outcome o;
    int total = 0;
    int bit_exact = 0;
    const auto check = [&](const NeutroTriple &x, const std::string &where) {
        const auto back = complement(complement(x));
        ++total;
        if (back == x) ++bit_exact;
        o.require(approx_equal(back, x, endpoint_tol), "involution broken at " + where);
    };
    for (int t = 0; t <= 20; ++t) {
        for (int i = 0; i <= 20; ++i) {
            for (int f = 0; f <= 20; ++f) {
                check(NeutroTriple::point(t * 0.05, i * 0.05, f * 0.05),
                      "(" + str(t * 0.05) + ", " + str(i * 0.05) + ", " + str(f * 0.05) + ")");
            }
        }
    }
    Rng rng(40001);
    for (int k = 0; k < 200; ++k) check(testing::involutive_triple(rng), "random case " + std::to_string(k));
    if (o.pass) {
        o.detail = std::to_string(total) + " triples within 1e-12 (" + std::to_string(bit_exact) +
                   " bit-exact; the rest differ by double rounding in 1-(1-s))";
    }
    return o;
}

Outcome ac5() {
    Outcome o;
    const auto sign = [](double c) { return (c > 0) - (c < 0); };
    long pairs = 0;
    std::vector<NeutroTriple> grid;
    for (int t = 0; t <= 10; ++t) {
        for (int i = 0; i <= 10; ++i) {
            for (int f = 0; f <= 10; ++f) grid.push_back(NeutroTriple::point(t / 10.0, i / 10.0, f / 10.0));
        }
    }
    std::vector<NeutroTriple> complements;
    for (const auto &x : grid) complements.push_back(complement(x));

    const auto same = [&](const IntervalUnion &l, const IntervalUnion &r) {
        if (l.parts().size() != r.parts().size()) return false;
        for (std::size_t k = 0; k < l.parts().size(); ++k) {
            const auto &p = l.parts()[k];
            const auto &q = r.parts()[k];
            if (std::abs(p.lo.standard() - q.lo.standard()) > endpoint_tol ||
                std::abs(p.hi.standard() - q.hi.standard()) > endpoint_tol ||
                sign(p.lo.coeff()) != sign(q.lo.coeff()) || sign(p.hi.coeff()) != sign(q.hi.coeff())) {
                return false;
            }
        }
        return true;
    };
    for (std::size_t a = 0; a < grid.size(); ++a) {
        for (std::size_t b = 0; b < grid.size(); ++b) {
            const auto lhs = complement(unite(grid[a], grid[b]));
            const auto rhs = intersect(complements[a], complements[b]);
            ++pairs;
            if (!(same(lhs.truth(), rhs.truth()) && same(lhs.indeterminacy(), rhs.indeterminacy()) &&
                  same(lhs.falsity(), rhs.falsity()))) {
                o.require(false, "mismatch: " + dsl::format(lhs) + " vs " + dsl::format(rhs));
            }
        }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " pairs, standard parts within 1e-12, signs agree";
    return o;
}

Outcome ac6() {
    Outcome o;
    Rng rng(60001);
    for (int k = 0; k < 500; ++k) {
        const auto x = testing::unit_triple(rng);
        const auto y = testing::unit_triple(rng);
        o.require(intersect(x, y) == intersect(y, x), "intersect not commutative at " + std::to_string(k));
        o.require(unite(x, y) == unite(y, x), "union not commutative at " + std::to_string(k));
    }
    for (int k = 0; k < 500; ++k) {
        const auto x = testing::standard_point_triple(rng);
        const auto y = testing::standard_point_triple(rng);
        const auto z = testing::standard_point_triple(rng);
        o.require(approx_equal(intersect(intersect(x, y), z), intersect(x, intersect(y, z)), assoc_tol),
                  "intersect not associative at " + std::to_string(k));
        o.require(approx_equal(unite(unite(x, y), z), unite(x, unite(y, z)), assoc_tol),
                  "union not associative at " + std::to_string(k));
    }
    if (o.pass) o.detail = "commutativity exact on 500 pairs, associativity within 1e-9 on 500 triples";
    return o;
}

// A triple below x in the subset order: T shifted down, F shifted up, I free.
NeutroTriple below(const NeutroTriple &x, Rng &rng) {
    const IntervalUnion down{testing::uniform(rng, 0.0, 0.3)};
    const IntervalUnion up{testing::uniform(rng, 0.0, 0.3)};
    return NeutroTriple::clamped(x.truth() - down, testing::unit_union(rng), x.falsity() + up);
}

Outcome ac7() {
    Outcome o;
    Rng rng(70001);
    for (int k = 0; k < 500; ++k) {
        const auto x = testing::unit_triple(rng);
        o.require(is_subset(x, x), "not reflexive at " + std::to_string(k));
    }
    for (int k = 0; k < 500; ++k) {
        const auto z = testing::unit_triple(rng);
        const auto y = below(z, rng);
        const auto x = below(y, rng);
        o.require(is_subset(y, z) && is_subset(x, y), "chain construction failed at " + std::to_string(k));
        o.require(is_subset(x, z), "not transitive at " + std::to_string(k));
    }
    if (o.pass) o.detail = "reflexive on 500 triples, transitive on 500 chains";
    return o;
}

Outcome ac8() {
    Outcome o;
    Rng rng(80001);
    long outputs = 0;
    for (int k = 0; k < 1000; ++k) {
        auto x = testing::unit_triple(rng);
        for (int depth = 0; depth < 5; ++depth) {
            const auto y = testing::unit_triple(rng);
            switch (testing::uniform_int(rng, 0, 3)) {
            case 0: x = complement(x); break;
            case 1: x = intersect(x, y); break;
            case 2: x = unite(x, y); break;
            default: x = difference(x, y); break;
            }
            ++outputs;
            o.require(within_unit(x), "endpoint escaped [0^-, 1^+]: " + dsl::format(x));
        }
    }
    if (o.pass) o.detail = std::to_string(outputs) + " outputs from 1000 chains of depth 5 inside [0^-, 1^+]";
    return o;
}

Outcome ac9() {
    Outcome o;
    Rng rng(90001);
    for (int k = 0; k < 500; ++k) {
        if (k % 2 == 0) {
            const auto c = testing::unit_union(rng, 4);
            const auto text = dsl::format(c);
            o.require(dsl::parse_component(text) == c, "component round trip failed: " + text);
        } else {
            const auto x = testing::unit_triple(rng);
            const auto text = dsl::format(x);
            const auto lit = dsl::parse_triple(text);
            o.require(NeutroTriple::strict(lit.truth, lit.indeterminacy, lit.falsity) == x,
                      "triple round trip failed: " + text);
        }
    }
    int diagnosed = 0;
    for (int k = 0; k < 1000; ++k) {
        const auto seed = testing::fuzz_seeds[static_cast<std::size_t>(
            testing::uniform_int(rng, 0, static_cast<int>(testing::fuzz_seeds.size()) - 1))];
        const auto tokens = dsl::tokenize(seed);
        // The final token is eof, which has no source text.
        const auto &victim = tokens[static_cast<std::size_t>(
            testing::uniform_int(rng, 0, static_cast<int>(tokens.size()) - 2))];
        const auto mutated = testing::delete_token(seed, victim);
        testing::FuzzOutcome r;
        try {
            r = testing::run_script(mutated);
        } catch (const std::exception &e) {
            o.require(false, std::string("non-diagnostic failure: ") + e.what());
            continue;
        }
        o.require(r.diagnosed, "no diagnostic after deleting '" + victim.text + "'");
        o.require(r.positioned, "diagnostic outside the source after deleting '" + victim.text + "'");
        if (r.diagnosed && r.positioned) ++diagnosed;
    }
    if (o.pass) {
        o.detail = "500 round trips; " + std::to_string(diagnosed) +
                   "/1000 token deletions gave positioned diagnostics";
    }
    return o;
}

Outcome ac10() {
    Outcome o;
    const std::string data = NEUTRO_TEST_DATA_DIR;
    const std::string script = data + "/worked_examples.ns";

    std::ostringstream table1, table2, err;
    const int code = cli::run_eval(script, cli::OutputFormat::table, true, table1, err);
    (void)cli::run_eval(script, cli::OutputFormat::table, true, table2, err);
    o.require(code == cli::exit_ok, "eval exit code " + std::to_string(code));
    o.require(table1.str() == table2.str(), "table output differs between runs");
    o.require(table1.str() == read_file(data + "/worked_examples.table.txt"), "table output differs from golden file");

    std::ostringstream json_out;
    (void)cli::run_eval(script, cli::OutputFormat::json, true, json_out, err);
    o.require(json_out.str() == read_file(data + "/worked_examples.json"), "JSON output differs from golden file");
    o.require(err.str().empty(), "unexpected diagnostics: " + err.str());

    int sets = 0;
    for (const auto &item : nlohmann::json::parse(json_out.str())) {
        if (item.at("kind") != "set") continue;
        const auto s = set_from_json(item.at("value"));
        o.require(to_json(s) == item.at("value"), "set does not round-trip: " + item.at("subject").get<std::string>());
        ++sets;
    }

    // Schema validation uses the Python jsonschema package.
    const std::string doc_path = NEUTRO_ACCEPTANCE_WORK_DIR "/worked_examples.out.json";
    std::ofstream(doc_path, std::ios::binary) << json_out.str();
    const std::string cmd = std::string("\"") + NEUTRO_PYTHON + "\" \"" + NEUTRO_SCHEMA_VALIDATOR +
                            "\" \"" + NEUTRO_RESULTS_SCHEMA + "\" \"" + doc_path + "\"";
    o.require(std::system(cmd.c_str()) == 0, "JSON output does not validate against the schema");

    std::ostringstream sink, diag;
    o.require(cli::run_source("set A over U { x: (0.5, 0.2) }", "s.ns", cli::OutputFormat::table, true,
                              sink, diag) == 1,
              "syntax error did not exit 1");
    o.require(cli::run_source("eval Q", "s.ns", cli::OutputFormat::table, true, sink, diag) == 2,
              "evaluation error did not exit 2");
    o.require(cli::run_eval(data + "/missing.ns", cli::OutputFormat::table, true, sink, diag) == 2,
              "missing file did not exit 2");
    o.require(diag.str() ==
                  "s.ns:1:28: expected ',' but found ')'\n"
                  "s.ns:1:6: undeclared name 'Q'\n" +
                      data + "/missing.ns: cannot open file\n",
              "unexpected diagnostics: " + diag.str());
    if (o.pass) {
        o.detail = "golden table and JSON byte-identical, " + std::to_string(sets) +
                   " set values round-trip, schema valid, exit codes 0/1/2";
    }
    return o;
}

} // namespace

int main() {
    report(1, "worked-example classification", ac1);
    report(2, "inf/sup identities", ac2);
    report(3, "Minkowski dense-sampling oracle", ac3);
    report(4, "complement involution", ac4);
    report(5, "De Morgan at standard-part level", ac5);
    report(6, "commutativity and associativity", ac6);
    report(7, "subset order", ac7);
    report(8, "clamping of operation chains", ac8);
    report(9, "DSL round trip and deletion fuzzing", ac9);
    report(10, "CLI end to end", ac10);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
