#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dikroma/enumeration.hpp"
#include "dikroma/errors.hpp"
#include "dikroma/formats.hpp"
#include "dikroma/greedy.hpp"
#include "dikroma/solvers.hpp"
#include "dikroma/sweep.hpp"

namespace {

using namespace dikroma;

std::string slurp(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Accepts a file path, "-" for stdin, or an inline digraph6 string
// (leading '&'). File contents may be edge-list or digraph6.
Digraph load_input(const std::string& source) {
    if (!source.empty() && source[0] == '&')
        return parse_digraph(source);
    if (source == "-")
        return parse_digraph(slurp(std::cin));
    std::ifstream file(source, std::ios::binary);
    if (!file)
        throw ParseError(source, "cannot open input file");
    return parse_digraph(slurp(file));
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open output file " + out_path);
    file << content;
}

VertexOrdering parse_order(const std::string& text, int n) {
    VertexOrdering phi;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            phi.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad ordering entry \"" + item + "\"");
        }
    }
    if (!is_permutation(phi, n))
        throw std::invalid_argument("ordering must be a permutation of 0.." +
                                    std::to_string(n - 1));
    return phi;
}

PairMode parse_mode(const std::string& name) {
    if (name == "ordered")
        return PairMode::ordered;
    if (name == "unordered")
        return PairMode::unordered;
    throw std::invalid_argument("pair mode must be ordered or unordered, got " + name);
}

std::vector<CheckId> parse_checks(const std::vector<std::string>& names) {
    std::vector<CheckId> checks;
    for (const std::string& name : names) {
        if (name == "all") {
            for (CheckId check : kAllChecks)
                if (std::find(checks.begin(), checks.end(), check) == checks.end())
                    checks.push_back(check);
            continue;
        }
        const auto check = parse_check(name);
        if (!check)
            throw std::invalid_argument("unknown check \"" + name + "\"");
        if (std::find(checks.begin(), checks.end(), *check) == checks.end())
            checks.push_back(*check);
    }
    return checks;
}

nlohmann::json coloring_json(const Coloring& c) {
    return {{"k", c.k}, {"colors", c.colors}};
}

std::string params_text(const ParameterReport& r) {
    const auto witness_line = [](const char* name, const Coloring& c) {
        std::string line = std::string("witness ") + name + ":";
        for (int v = 0; v < c.order(); ++v)
            line += ' ' + std::to_string(c.color_of(v));
        return line + '\n';
    };
    std::string out;
    out += "n " + std::to_string(r.n) + '\n';
    out += "m " + std::to_string(r.m) + '\n';
    out += "dc " + std::to_string(r.dc.value) + '\n';
    out += "dg " + std::to_string(r.dg.value) + '\n';
    out += "dac " + std::to_string(r.dac.value) + '\n';
    if (r.dco)
        out += "dco " + std::to_string(*r.dco) + '\n';
    out += "delta_out " + std::to_string(r.delta_out) + '\n';
    out += "delta_in " + std::to_string(r.delta_in) + '\n';
    out += "pair_mode " + pair_mode_name(r.mode) + '\n';
    out += witness_line("dc", r.dc.witness);
    out += witness_line("dac", r.dac.witness);
    out += witness_line("dg", r.dg.witness);
    return out;
}

struct CliConfig {
    std::string input;
    std::string order_text;
    std::string kind = "greedy";
    std::string pair_mode = "ordered";
    std::string format = "json";
    std::string out_path;
    std::vector<std::string> check_names;
    std::vector<double> ps;
    bool with_dco = false;
    bool exhaustive = false;
    int n = 0;
    int samples = 2000;
    int workers = 1;
    std::uint64_t seed = 0;
};

int cmd_params(const CliConfig& cfg) {
    const Digraph d = load_input(cfg.input);
    ReportOptions opts;
    opts.mode = parse_mode(cfg.pair_mode);
    opts.with_dco = cfg.with_dco;
    opts.limits = SolverLimits::from_env();
    const ParameterReport report = parameter_report(d, opts);
    if (cfg.format == "json")
        emit(cfg.out_path, to_json(report));
    else if (cfg.format == "text")
        emit(cfg.out_path, params_text(report));
    else
        throw std::invalid_argument("params supports --format json or text");
    return 0;
}

int cmd_greedy(const CliConfig& cfg) {
    const Digraph d = load_input(cfg.input);
    const VertexOrdering phi = cfg.order_text.empty() ? identity_ordering(d.order())
                                                      : parse_order(cfg.order_text, d.order());
    const Coloring c = greedy_color(d, phi);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["ordering"] = phi;
        j["k"] = c.k;
        j["colors"] = c.colors;
        emit(cfg.out_path, j.dump(2));
    } else if (cfg.format == "text") {
        emit(cfg.out_path, serialize_coloring(c));
    } else {
        throw std::invalid_argument("greedy supports --format json or text");
    }
    return 0;
}

int cmd_parsimonious(const CliConfig& cfg) {
    const Digraph d = load_input(cfg.input);
    // the reuse-choice search memoizes one entry per reachable class
    // partition, which approaches Bell(n) on sparse inputs; 12 keeps the
    // worst case in the millions
    const int cap = std::min(12, SolverLimits::from_env().max_n);
    if (d.order() > cap)
        throw CapError("parsimonious minimization is capped at n = " + std::to_string(cap) +
                       ", got n = " + std::to_string(d.order()));
    const VertexOrdering phi = cfg.order_text.empty() ? identity_ordering(d.order())
                                                      : parse_order(cfg.order_text, d.order());
    const ParsimoniousRun run = parsimonious_min_colors(d, phi);
    const Coloring c = replay_run(d, run);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["ordering"] = run.ordering;
        j["trace"] = run.trace;
        j["k"] = run.colors_used;
        j["colors"] = c.colors;
        emit(cfg.out_path, j.dump(2));
    } else if (cfg.format == "text") {
        std::string out = "k " + std::to_string(run.colors_used) + "\ntrace";
        for (int choice : run.trace)
            out += ' ' + std::to_string(choice);
        out += '\n' + serialize_coloring(c);
        emit(cfg.out_path, out);
    } else {
        throw std::invalid_argument("parsimonious supports --format json or text");
    }
    return 0;
}

int cmd_interpolate(const CliConfig& cfg) {
    const Digraph d = load_input(cfg.input);
    const PairMode mode = parse_mode(cfg.pair_mode);
    const SolverLimits limits = SolverLimits::from_env();
    InterpolationResult result;
    if (cfg.kind == "greedy")
        result = greedy_interpolation_witnesses(d, limits);
    else if (cfg.kind == "complete")
        result = complete_interpolation_witnesses(d, mode, limits);
    else
        throw std::invalid_argument("--kind must be greedy or complete, got " + cfg.kind);
    nlohmann::json j;
    j["kind"] = cfg.kind;
    j["lo"] = result.lo;
    j["hi"] = result.hi;
    j["missing"] = result.missing;
    j["witnesses"] = nlohmann::json::object();
    for (const auto& [k, coloring] : result.witnesses)
        j["witnesses"][std::to_string(k)] = coloring_json(coloring);
    emit(cfg.out_path, j.dump(2));
    return result.missing.empty() ? 0 : 1;
}

int cmd_sweep(const CliConfig& cfg) {
    if (cfg.n < 1)
        throw std::invalid_argument("sweep needs --n >= 1");
    FamilySpec family;
    if (cfg.exhaustive) {
        family = FamilySpec::exhaustive(cfg.n);
        family.seed = cfg.seed; // drives the heavy-check subsample
    } else {
        const std::vector<double> ps =
            cfg.ps.empty() ? std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9} : cfg.ps;
        family = FamilySpec::sampled(cfg.n, ps, cfg.samples, cfg.seed);
    }
    SweepOptions options;
    options.mode = parse_mode(cfg.pair_mode);
    options.workers = cfg.workers;
    options.collect_rows = cfg.format == "csv";
    options.limits = SolverLimits::from_env();
    const std::vector<CheckId> checks =
        parse_checks(cfg.check_names.empty() ? std::vector<std::string>{"all"}
                                             : cfg.check_names);
    const SweepReport report = run_sweep(family, checks, options);
    if (cfg.format == "json")
        emit(cfg.out_path, to_json(report));
    else if (cfg.format == "csv")
        emit(cfg.out_path, to_csv(report));
    else
        throw std::invalid_argument("sweep supports --format json or csv");
    return report.violations.empty() ? 0 : 1;
}

int cmd_witness(const CliConfig& cfg) {
    if (cfg.n < 1)
        throw std::invalid_argument("witness needs --n >= 1");
    if (cfg.check_names.size() != 1)
        throw std::invalid_argument("witness needs exactly one --check (ng-dc, ng-dac, ng-dg)");
    const auto check = parse_check(cfg.check_names.front());
    if (!check)
        throw std::invalid_argument("unknown check \"" + cfg.check_names.front() + "\"");
    ExtremalOptions options;
    if (!cfg.ps.empty())
        options.ps = cfg.ps;
    options.samples_per_p = cfg.samples;
    options.seed = cfg.seed;
    options.mode = parse_mode(cfg.pair_mode);
    options.limits = SolverLimits::from_env();
    const std::vector<ExtremalWitness> witnesses = find_extremal(cfg.n, *check, options);
    emit(cfg.out_path, to_json(witnesses));
    const int bound = *check_bound(*check, cfg.n);
    for (const ExtremalWitness& w : witnesses)
        if (w.sum > bound)
            return 1; // a sum above the bound is a theorem violation
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact acyclic-coloring parameters of small digraphs "
                 "(dichromatic, diachromatic, digrundy, diochromatic) "
                 "and family-scale bound verification"};
    app.require_subcommand(1);

    CliConfig cfg;

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", cfg.input,
                        "digraph: file path (edge list or digraph6), inline digraph6 "
                        "starting with '&', or - for stdin")
            ->required();
    };
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--pair-mode", cfg.pair_mode, "ordered (default) or unordered");
        cmd->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
        cmd->add_option("--format", cfg.format, "output format (default json)");
    };

    CLI::App* params = app.add_subcommand("params", "compute dc, dg, dac (and optionally dco) "
                                                    "with validated witness colorings");
    add_input(params);
    add_common(params);
    params->add_flag("--with-dco", cfg.with_dco, "also compute the diochromatic number (n <= 7)");

    CLI::App* greedy = app.add_subcommand("greedy", "run the greedy coloring on an ordering");
    add_input(greedy);
    add_common(greedy);
    greedy->add_option("--order", cfg.order_text,
                       "comma-separated vertex ordering, e.g. 2,0,1,3 (default 0,1,...)");

    CLI::App* pars = app.add_subcommand("parsimonious",
                                        "minimum colors over forced-reuse runs on an ordering, "
                                        "with an optimal choice trace");
    add_input(pars);
    add_common(pars);
    pars->add_option("--order", cfg.order_text,
                     "comma-separated vertex ordering (default 0,1,...)");

    CLI::App* interp = app.add_subcommand("interpolate",
                                          "one witness coloring per color count in the full "
                                          "range of a parameter pair");
    add_input(interp);
    add_common(interp);
    interp->add_option("--kind", cfg.kind, "greedy ([dc, dg]) or complete ([dc, dac])");

    CLI::App* sweep = app.add_subcommand("sweep", "verify checks across a digraph family");
    add_common(sweep);
    sweep->add_option("--n", cfg.n, "vertex count")->required();
    sweep->add_flag("--exhaustive", cfg.exhaustive,
                    "walk every labeled digraph on n vertices (n <= 5)");
    sweep->add_option("--samples", cfg.samples, "samples per arc probability (default 2000)");
    sweep->add_option("--p", cfg.ps, "arc probability; repeatable (default 0.1 0.3 0.5 0.7 0.9)");
    sweep->add_option("--seed", cfg.seed, "sampling seed (default 0)");
    sweep->add_option("--check", cfg.check_names,
                      "check name or 'all'; repeatable (default all)");
    sweep->add_option("--workers", cfg.workers, "parallel workers (default 1)");

    CLI::App* witness = app.add_subcommand("witness", "digraphs maximizing an ng-* pair sum");
    add_common(witness);
    witness->add_option("--n", cfg.n, "vertex count")->required();
    witness->add_option("--check,--target", cfg.check_names, "ng-dc, ng-dac, or ng-dg");
    witness->add_option("--samples", cfg.samples, "samples per probability when n > 5");
    witness->add_option("--p", cfg.ps, "arc probability for sampling; repeatable");
    witness->add_option("--seed", cfg.seed, "sampling seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (params->parsed())
            return cmd_params(cfg);
        if (greedy->parsed())
            return cmd_greedy(cfg);
        if (pars->parsed())
            return cmd_parsimonious(cfg);
        if (interp->parsed())
            return cmd_interpolate(cfg);
        if (sweep->parsed())
            return cmd_sweep(cfg);
        if (witness->parsed())
            return cmd_witness(cfg);
    } catch (const CapError& e) {
        std::cerr << "cap refused: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
