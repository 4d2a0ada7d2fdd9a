// spiderlab -- command-line front end for the labeling library.
//
// Subcommands: label, verify, oracle, min-k, params, gen, cross-check.
// Exit codes: 0 success or positive verdict, 1 negative verdict or
// construction failure, 2 usage, parse, validation, or budget errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spiderlab/cross_check.hpp"
#include "spiderlab/forest.hpp"
#include "spiderlab/generate.hpp"
#include "spiderlab/io.hpp"
#include "spiderlab/oracle.hpp"
#include "spiderlab/scheme_a.hpp"
#include "spiderlab/scheme_b.hpp"
#include "spiderlab/scheme_c.hpp"
#include "spiderlab/sums.hpp"

namespace {

using namespace spiderlab;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Forest input is either the text format or a JSON document; sniffed by
/// the first non-whitespace byte.
SpiderForest load_forest(const std::string& path) {
    std::string text = read_input(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return forest_from_json(nlohmann::json::parse(text));
    return parse_forest_text(text);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "', expected A..B");
    }
}

std::vector<int> parse_lengths(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad length list '" + text +
                                        "', expected comma-separated integers");
        }
    }
    if (out.empty())
        throw std::invalid_argument("empty length list");
    return out;
}

std::string fmt_block(const LabelBlock& b) {
    if (b.empty())
        return "[]";
    std::ostringstream os;
    os << '[' << b.lo << ',' << b.hi << ']';
    return os.str();
}

Scheme parse_scheme(const std::string& name) {
    if (name == "a") return Scheme::A;
    if (name == "b") return Scheme::B;
    if (name == "c") return Scheme::C;
    throw std::invalid_argument("unknown scheme '" + name + "'");
}

/// Strongest applicable scheme: a (any k >= 0), else c (any k >= 0), else
/// b when k clears the forest's threshold.
Scheme pick_auto(const SpiderForest& forest, Label k) {
    if (k >= 0 && validate_for_scheme(forest, Scheme::A).ok())
        return Scheme::A;
    if (k >= 0 && validate_for_scheme(forest, Scheme::C).ok())
        return Scheme::C;
    if (validate_for_scheme(forest, Scheme::B).ok()) {
        Label k0 = scheme_b::compute_k0(forest);
        if (k >= k0)
            return Scheme::B;
        throw std::invalid_argument(
            "no scheme applies: a/c hypotheses fail or k < 0, and scheme b needs k >= " +
            std::to_string(k0));
    }
    throw std::invalid_argument("no scheme applies to this forest:\n" +
                                validate_for_scheme(forest, Scheme::B).to_string());
}

struct LabelArgs {
    std::string input, scheme = "auto", out, dot;
    Label k = 0;
};

int run_label(const LabelArgs& args) {
    SpiderForest forest = load_forest(args.input);
    Scheme scheme;
    if (args.scheme == "auto") {
        scheme = pick_auto(forest, args.k);
        std::cerr << "note: scheme " << scheme_letter(scheme) << " selected\n";
    } else {
        scheme = parse_scheme(args.scheme);
    }

    Labeling labeling;
    scheme_c::SwitchLog switches;
    switch (scheme) {
        case Scheme::A: labeling = scheme_a::label(forest, args.k); break;
        case Scheme::B: labeling = scheme_b::label(forest, args.k); break;
        case Scheme::C: {
            auto result = scheme_c::label_full(forest, args.k);
            labeling = std::move(result.labeling);
            switches = std::move(result.switches);
            break;
        }
    }

    auto verdict = check_antimagic(forest, labeling);
    if (!verdict.ok()) {
        std::cerr << "internal error: constructed labeling failed verification: "
                  << verdict.failure << '\n';
        return 1;
    }
    auto doc = labeling_to_json(forest, labeling,
                                switches.empty() ? nullptr : &switches);
    write_output(args.out, doc.dump(2) + "\n");
    if (!args.dot.empty())
        write_output(args.dot, to_dot(forest, labeling));
    return 0;
}

struct VerifyArgs {
    std::string input, labeling;
};

int run_verify(const VerifyArgs& args) {
    SpiderForest forest = load_forest(args.input);
    Labeling labeling =
        labeling_from_json(forest, nlohmann::json::parse(read_input(args.labeling)));
    auto verdict = check_antimagic(forest, labeling);
    std::cout << "edges=" << forest.edge_count() << " k=" << labeling.k
              << " range=[" << labeling.k + 1 << ',' << labeling.k + forest.edge_count()
              << "]\n";
    std::cout << "bijection: " << (verdict.bijection_ok ? "ok" : "FAIL") << '\n';
    std::cout << "range: " << (verdict.range_ok ? "ok" : "FAIL") << '\n';
    std::cout << "sums: " << (verdict.sums_distinct ? "distinct" : "FAIL") << '\n';
    if (verdict.ok()) {
        std::cout << "antimagic: yes\n";
        return 0;
    }
    std::cout << "antimagic: no (" << verdict.failure << ")\n";
    return 1;
}

struct OracleArgs {
    std::string input, out;
    Label k = 0;
    int max_edges = 10;
    unsigned parallel = 1;
    bool no_prune = false;
};

int run_oracle(const OracleArgs& args) {
    SpiderForest forest = load_forest(args.input);
    oracle::Options opts;
    opts.edge_budget = args.max_edges;
    opts.prune = !args.no_prune;
    opts.threads = args.parallel;
    auto result = oracle::brute_force(forest, args.k, opts);
    std::cout << (result.feasible ? "feasible" : "infeasible")
              << " k=" << args.k << " nodes=" << result.nodes_examined << '\n';
    if (result.feasible) {
        auto doc = labeling_to_json(forest, *result.witness);
        if (!args.out.empty())
            write_output(args.out, doc.dump(2) + "\n");
        else
            std::cout << doc.dump(2) << '\n';
    }
    return result.feasible ? 0 : 1;
}

struct MinKArgs {
    std::string input;
    Label from = 0, to = 0;
    int max_edges = 10;
    bool no_prune = false;
};

int run_min_k(const MinKArgs& args) {
    SpiderForest forest = load_forest(args.input);
    oracle::Options opts;
    opts.edge_budget = args.max_edges;
    opts.prune = !args.no_prune;
    auto result = oracle::min_k(forest, args.from, args.to, opts);
    for (const auto& [k, feasible] : result.feasibility)
        std::cout << "k=" << k << ' ' << (feasible ? "feasible" : "infeasible") << '\n';
    if (result.min_feasible) {
        std::cout << "min=" << *result.min_feasible << '\n';
        return 0;
    }
    std::cout << "min=none\n";
    return 1;
}

struct ParamsArgs {
    std::string input, scheme;
    Label k = 0;
};

int run_params(const ParamsArgs& args) {
    SpiderForest forest = load_forest(args.input);
    std::ostringstream os;
    switch (parse_scheme(args.scheme)) {
        case Scheme::A: {
            auto p = scheme_a::compute_params(forest, args.k);
            os << "scheme=a k=" << p.k << " m=" << p.m << '\n';
            os << "a=" << p.a << " b=" << p.b << " c1=" << p.c1 << " c2=" << p.c2
               << " n1=" << p.n1 << " t'=" << p.t_prime << '\n';
            for (std::size_t i = 0; i < p.blocks.size(); ++i)
                os << (i ? " " : "") << 'I' << i + 1 << '=' << fmt_block(p.blocks[i]);
            os << '\n';
            break;
        }
        case Scheme::B: {
            auto p = scheme_b::compute_params(forest, args.k);
            os << "scheme=b k=" << p.k << " m=" << p.m << " k0=" << p.k0 << '\n';
            os << "s=" << p.s << " q=" << p.q << " alpha=" << p.alpha
               << " beta=" << p.beta << " gamma=" << p.gamma << '\n';
            os << "a=" << p.a << " b=" << p.b << " c1=" << p.c1 << " c2=" << p.c2
               << " n1=" << p.n1 << " t'=" << p.t_prime << '\n';
            for (std::size_t i = 0; i < p.blocks.size(); ++i)
                os << (i ? " " : "") << 'I' << i + 1 << '=' << fmt_block(p.blocks[i]);
            os << '\n';
            break;
        }
        case Scheme::C: {
            auto p = scheme_c::compute_params(forest, args.k);
            os << "scheme=c k=" << p.k << " m=" << p.m << '\n';
            os << "s=" << p.s << " t1=" << p.t1 << " t2=" << p.t2 << " t3=" << p.t3
               << " m'=" << p.m_prime << '\n';
            os << "I1=" << fmt_block(p.low) << " I2=" << fmt_block(p.pendant)
               << " I3=" << fmt_block(p.high) << '\n';
            os << "classes=";
            for (std::size_t i = 0; i < p.classes.size(); ++i) {
                const char* name = "";
                switch (p.classes[i]) {
                    case scheme_c::SpiderClass::Star3: name = "star3"; break;
                    case scheme_c::SpiderClass::StarBig: name = "star"; break;
                    case scheme_c::SpiderClass::MixedPendants: name = "mixed"; break;
                    case scheme_c::SpiderClass::FewPendants: name = "few"; break;
                }
                os << (i ? "," : "") << name;
            }
            os << '\n';
            break;
        }
    }
    std::cout << os.str();
    return 0;
}

struct GenArgs {
    std::uint64_t seed = 0;
    std::string spiders = "1..3", legs = "3..6", lengths = "1,2,3,4,5", out;
    bool scheme_c_only = false;
    bool json = false;
};

int run_gen(const GenArgs& args) {
    GenSpec spec;
    std::tie(spec.spiders_lo, spec.spiders_hi) = parse_range(args.spiders);
    std::tie(spec.legs_lo, spec.legs_hi) = parse_range(args.legs);
    spec.length_menu = parse_lengths(args.lengths);
    if (args.scheme_c_only) {
        std::vector<int> menu;
        for (int len : spec.length_menu)
            if (len == 1 || len % 2 == 0)
                menu.push_back(len);
        if (menu.empty())
            throw std::invalid_argument(
                "--scheme-c-only left no usable lengths (need 1 or even)");
        spec.length_menu = std::move(menu);
    }
    SpiderForest forest = generate_forest(args.seed, spec);
    if (args.json)
        write_output(args.out, forest_to_json(forest).dump(2) + "\n");
    else
        write_output(args.out, to_text(forest));
    return 0;
}

struct CrossCheckArgs {
    std::string input, scheme;
    Label k = 0;
    int max_edges = 10;
    unsigned parallel = 1;
};

int run_cross_check(const CrossCheckArgs& args) {
    SpiderForest forest = load_forest(args.input);
    oracle::Options opts;
    opts.edge_budget = args.max_edges;
    opts.threads = args.parallel;
    auto result = oracle::cross_check(forest, args.k, parse_scheme(args.scheme), opts);
    std::cout << result.detail << '\n'
              << (result.agree ? "agree" : "disagree") << '\n';
    return result.agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-shifted antimagic labelings of spider forests"};
    app.require_subcommand(1);

    LabelArgs label_args;
    auto* label_cmd = app.add_subcommand(
        "label",
        "Construct a labeling. --scheme auto picks the strongest applicable "
        "scheme: a (legs >= 2, any k >= 0), else c (legs 1 or even, any k >= 0), "
        "else b (any legs, k >= k0).");
    label_cmd->add_option("--input", label_args.input, "forest file (text or json, - for stdin)")
        ->required();
    label_cmd->add_option("--k", label_args.k, "shift")->required();
    label_cmd->add_option("--scheme", label_args.scheme, "auto|a|b|c")
        ->check(CLI::IsMember({"auto", "a", "b", "c"}));
    label_cmd->add_option("--out", label_args.out, "labeling json output (default stdout)");
    label_cmd->add_option("--dot", label_args.dot, "also write a graphviz rendering here");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check a labeling against a forest.");
    verify_cmd->add_option("--input", verify_args.input, "forest file")->required();
    verify_cmd->add_option("--labeling", verify_args.labeling, "labeling json")->required();

    OracleArgs oracle_args;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "Exhaustive feasibility search (small instances).");
    oracle_cmd->add_option("--input", oracle_args.input, "forest file")->required();
    oracle_cmd->add_option("--k", oracle_args.k, "shift")->required();
    oracle_cmd->add_option("--max-edges", oracle_args.max_edges, "edge budget (default 10)");
    oracle_cmd->add_option("--parallel", oracle_args.parallel, "worker threads");
    oracle_cmd->add_flag("--no-prune", oracle_args.no_prune, "disable sum pruning");
    oracle_cmd->add_option("--out", oracle_args.out, "write the witness json here");

    MinKArgs min_k_args;
    auto* min_k_cmd =
        app.add_subcommand("min-k", "Oracle feasibility over a range of shifts.");
    min_k_cmd->add_option("--input", min_k_args.input, "forest file")->required();
    min_k_cmd->add_option("--from", min_k_args.from, "first shift")->required();
    min_k_cmd->add_option("--to", min_k_args.to, "last shift")->required();
    min_k_cmd->add_option("--max-edges", min_k_args.max_edges, "edge budget (default 10)");
    min_k_cmd->add_flag("--no-prune", min_k_args.no_prune, "disable sum pruning");

    ParamsArgs params_args;
    auto* params_cmd =
        app.add_subcommand("params", "Dump scheme parameters and label intervals.");
    params_cmd->add_option("--input", params_args.input, "forest file")->required();
    params_cmd->add_option("--k", params_args.k, "shift")->required();
    params_cmd->add_option("--scheme", params_args.scheme, "a|b|c")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c"}));

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Seeded random forest.");
    gen_cmd->add_option("--seed", gen_args.seed, "rng seed")->required();
    gen_cmd->add_option("--spiders", gen_args.spiders, "spider count range A..B (default 1..3)");
    gen_cmd->add_option("--legs", gen_args.legs, "leg count range A..B (default 3..6)");
    gen_cmd->add_option("--lengths", gen_args.lengths,
                        "comma-separated leg length menu (default 1,2,3,4,5)");
    gen_cmd->add_flag("--scheme-c-only", gen_args.scheme_c_only,
                      "restrict the menu to pendant or even lengths");
    gen_cmd->add_flag("--json", gen_args.json, "emit forest json instead of text");
    gen_cmd->add_option("--out", gen_args.out, "output file (default stdout)");

    CrossCheckArgs cross_args;
    auto* cross_cmd = app.add_subcommand(
        "cross-check", "Run a scheme and the oracle on the same instance and compare.");
    cross_cmd->add_option("--input", cross_args.input, "forest file")->required();
    cross_cmd->add_option("--k", cross_args.k, "shift")->required();
    cross_cmd->add_option("--scheme", cross_args.scheme, "a|b|c")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c"}));
    cross_cmd->add_option("--max-edges", cross_args.max_edges, "edge budget (default 10)");
    cross_cmd->add_option("--parallel", cross_args.parallel, "oracle worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (label_cmd->parsed())
            return run_label(label_args);
        if (verify_cmd->parsed())
            return run_verify(verify_args);
        if (oracle_cmd->parsed())
            return run_oracle(oracle_args);
        if (min_k_cmd->parsed())
            return run_min_k(min_k_args);
        if (params_cmd->parsed())
            return run_params(params_args);
        if (gen_cmd->parsed())
            return run_gen(gen_args);
        if (cross_cmd->parsed())
            return run_cross_check(cross_args);
    } catch (const spiderlab::scheme_c::ConstructionFailure& e) {
        std::cerr << "construction failure: " << e.what() << '\n';
        return 1;
    } catch (const spiderlab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const spiderlab::oracle::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
