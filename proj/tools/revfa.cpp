#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "revfa/analysis.hpp"
#include "revfa/io.hpp"
#include "revfa/sim.hpp"
#include "revfa/transforms.hpp"
#include "revfa/witnesses.hpp"

using namespace revfa;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string show(const std::string& w) { return w.empty() ? "ε" : w; }

int cmd_validate(const std::string& file) {
    const Machine m = load_machine(file, false);
    const auto report = validate(m);
    std::cout << "kind: " << kind_keyword(m) << "\n";
    std::visit(
        [](const auto& x) {
            auto cls = infer_class(x);
            std::cout << "inferred: " << (cls ? std::string(to_string(*cls)) : "none") << "\n";
        },
        m);
    for (const auto& i : report.issues) {
        std::cout << (i.kind == IssueKind::structural ? "error: " : "violation: ") << i.message << "\n";
    }
    for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    std::cout << (report.ok() ? "valid" : "invalid") << "\n";
    return report.ok() ? exit_ok : exit_negative;
}

int cmd_run(const std::string& file, const std::string& input, bool trace) {
    const Machine m = load_machine(file);
    if (const auto* s = std::get_if<SweepingMachine>(&m)) {
        const Trace t = run_sweeping(*s, input);
        std::cout << to_string(t.verdict) << "\npasses: " << t.pass_count << "\n";
        if (trace) std::cout << format_trace(*s, t);
        return t.accepted() ? exit_ok : exit_negative;
    }
    const auto& one = std::get<OneWayMachine>(m);
    const MultiRun r = run_mrfa(one, input);
    std::cout << (r.accepted ? "accept" : "reject") << "\npasses: 1\n";
    if (trace) {
        for (const auto& [start, t] : r.traces) {
            std::cout << "from " << one.states[start.index] << ":\n" << format_trace(one, t);
        }
    }
    return r.accepted ? exit_ok : exit_negative;
}

int cmd_transform(const std::string& file, const std::string& to, const std::string& out, bool full) {
    const Machine m = load_machine(file);
    const auto* sweep = std::get_if<SweepingMachine>(&m);
    const auto* one = std::get_if<OneWayMachine>(&m);
    auto need_sweeping = [&] {
        if (!sweep) throw std::invalid_argument("--to " + to + " needs a sweeping machine");
        return *sweep;
    };
    Machine result;
    if (to == "one-side") {
        result = both_sides_to_one_side(need_sweeping());
    } else if (to == "mrfa") {
        result = srfa_to_mrfa(need_sweeping(), full ? StateSpace::full : StateSpace::reachable);
    } else if (to == "three-pass") {
        result = srfa_to_three_pass(need_sweeping());
    } else if (to == "unary-srfa") {
        if (!one) throw std::invalid_argument("--to unary-srfa needs a one-way machine");
        result = unary_mrfa_to_srfa(*one);
    } else if (to == "dfa") {
        result = to_dfa(m);
    } else {
        result = dfa_minimize(to_dfa(m));
    }
    write_output(out, emit_machine(result));
    return exit_ok;
}

int cmd_equiv(const std::string& a_file, const std::string& b_file, std::optional<std::size_t> max_len) {
    const Machine a = load_machine(a_file);
    const Machine b = load_machine(b_file);
    const EquivResult r = max_len ? bounded_equiv(a, b, *max_len) : exact_equiv(a, b);
    if (r.equivalent) {
        std::cout << "equivalent";
        if (max_len) std::cout << " up to length " << *max_len;
        std::cout << "\n";
        return exit_ok;
    }
    std::cout << "not equivalent\ncounterexample: '" << *r.counterexample << "'\n";
    return exit_negative;
}

int cmd_enumerate(const std::string& file, std::size_t max_len) {
    const LanguageOracle oracle = LanguageOracle::of(load_machine(file));
    for (const auto& w : oracle.enumerate(max_len)) std::cout << show(w) << "\n";
    return exit_ok;
}

int cmd_pin(const std::string& file, const PinBounds& bounds) {
    const PinResult r = pin_falsify(load_machine(file), bounds);
    if (r.violation) {
        std::cout << "violation: x='" << r.violation->x << "' y='" << r.violation->y << "' z='" << r.violation->z
                  << "'\n";
        return exit_negative;
    }
    std::cout << "no violation (|x|≤" << bounds.max_x << ", |y|≤" << bounds.max_y << ", |z|≤" << bounds.max_z
              << ", reps " << r.reps << ")\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reversible and sweeping finite automata toolkit"};
    app.require_subcommand(1);

    std::string file, file_b, input, to, out, name, cls, alphabet, target, reps = "auto";
    bool trace = false, exact = false, full = false, list = false;
    std::optional<std::size_t> max_len_opt, k, max_initials, max_accepting;
    std::size_t max_len = 0, max_states = 0;
    std::uint64_t limit = SearchQuery{}.limit;
    PinBounds pin;

    auto* validate_cmd = app.add_subcommand("validate", "Validate a machine file and infer its class");
    validate_cmd->add_option("FILE", file, "Machine file")->required();

    auto* run_cmd = app.add_subcommand("run", "Run a machine on a string");
    run_cmd->add_option("FILE", file, "Machine file")->required();
    run_cmd->add_option("STRING", input, "Input string (\"\" for the empty word)")->required();
    run_cmd->add_flag("--trace", trace, "Print every configuration");

    auto* transform_cmd = app.add_subcommand("transform", "Apply a construction");
    transform_cmd->add_option("FILE", file, "Machine file")->required();
    transform_cmd->add_option("--to", to, "Target form")
        ->required()
        ->check(CLI::IsMember({"one-side", "mrfa", "three-pass", "unary-srfa", "dfa", "min-dfa"}));
    transform_cmd->add_option("-o,--output", out, "Output file (default: stdout)");
    transform_cmd->add_flag("--full-space", full, "With --to mrfa, keep every behavior pair, reachable or not");

    auto* equiv_cmd = app.add_subcommand("equiv", "Compare the languages of two machines");
    equiv_cmd->add_option("FILE_A", file, "First machine")->required();
    equiv_cmd->add_option("FILE_B", file_b, "Second machine")->required();
    auto* equiv_len = equiv_cmd->add_option("--max-len", max_len_opt, "Compare words up to this length only");
    equiv_cmd->add_flag("--exact", exact, "Exact comparison via minimal DFAs (default)")->excludes(equiv_len);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List accepted words in length-lexicographic order");
    enumerate_cmd->add_option("FILE", file, "Machine file")->required();
    enumerate_cmd->add_option("--max-len", max_len, "Maximum word length")->required();

    auto* witness_cmd = app.add_subcommand("witness", "Write a catalog machine");
    witness_cmd->add_option("NAME", name, "Witness name");
    witness_cmd->add_option("--k", k, "Parameter of Lk-union and Lk-srfa")
        ->check(CLI::Range(witness_min_k, witness_max_k));
    witness_cmd->add_option("-o,--output", out, "Output file (default: stdout)");
    witness_cmd->add_flag("--list", list, "List witness names");

    auto* pin_cmd = app.add_subcommand("pin-check", "Search for a violation of xy+z ⊆ L ⇒ xz ∈ L");
    pin_cmd->add_option("FILE", file, "Machine file")->required();
    pin_cmd->add_option("--max-x", pin.max_x, "Maximum |x|")->capture_default_str();
    pin_cmd->add_option("--max-y", pin.max_y, "Maximum |y|")->capture_default_str();
    pin_cmd->add_option("--max-z", pin.max_z, "Maximum |z|")->capture_default_str();
    pin_cmd->add_option("--reps", reps, "Repetitions of y checked, or auto (#states + 1)")->capture_default_str();

    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for a small reversible automaton");
    search_cmd->add_option("--class", cls, "1rfa, 1perfa or mrfa")
        ->required()
        ->check(CLI::IsMember({"1rfa", "1perfa", "mrfa"}));
    search_cmd->add_option("--max-states", max_states, "Maximum number of states")->required();
    search_cmd->add_option("--alphabet", alphabet, "Symbols, e.g. ab")->required();
    search_cmd->add_option("--target", target, "Machine whose language is the target")->required();
    search_cmd->add_option("--max-len", max_len, "Words up to this length must agree")->required();
    search_cmd->add_option("--max-initials", max_initials, "Cap on initial states");
    search_cmd->add_option("--max-accepting", max_accepting, "Cap on accepting states");
    search_cmd->add_option("--limit", limit, "Refuse beyond this many transition structures")->capture_default_str();

    auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
    dot_cmd->add_option("FILE", file, "Machine file")->required();
    dot_cmd->add_option("-o,--output", out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*validate_cmd) return cmd_validate(file);
        if (*run_cmd) return cmd_run(file, input, trace);
        if (*transform_cmd) return cmd_transform(file, to, out, full);
        if (*equiv_cmd) return cmd_equiv(file, file_b, max_len_opt);
        if (*enumerate_cmd) return cmd_enumerate(file, max_len);
        if (*witness_cmd) {
            if (list) {
                for (const auto& n : witness_names()) std::cout << n << "\n";
                return exit_ok;
            }
            if (name.empty()) throw std::invalid_argument("witness: NAME is required (see --list)");
            write_output(out, emit_machine(witness(name, k).machine));
            return exit_ok;
        }
        if (*pin_cmd) {
            if (reps != "auto") {
                pin.reps = std::stoul(reps);
                if (pin.reps == 0) throw std::invalid_argument("--reps must be at least 1");
            }
            return cmd_pin(file, pin);
        }
        if (*search_cmd) {
            std::string symbols;
            for (char c : alphabet) {
                if (c != ' ' && c != ',') symbols += c;
            }
            SearchQuery q;
            q.cls = *parse_search_class(cls);
            q.max_states = max_states;
            q.alphabet = Alphabet(symbols);
            q.target = LanguageOracle::of(load_machine(target));
            q.max_len = max_len;
            q.max_initials = max_initials;
            q.max_accepting = max_accepting;
            q.limit = limit;
            const SearchReport r = search_model(q);
            std::cout << r.to_text();
            if (r.machine) std::cout << emit_machine(*r.machine);
            return r.found() ? exit_ok : exit_negative;
        }
        if (*dot_cmd) {
            write_output(out, to_dot(load_machine(file)));
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
