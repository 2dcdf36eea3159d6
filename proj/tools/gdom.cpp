#include <gdom/bounds.hpp>
#include <gdom/certificates.hpp>
#include <gdom/constructors.hpp>
#include <gdom/errors.hpp>
#include <gdom/exact.hpp>
#include <gdom/experiment.hpp>
#include <gdom/generators.hpp>
#include <gdom/io.hpp>
#include <gdom/json.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace gdom;

namespace
{
    enum ExitCode
    {
        success = 0,
        violation = 1,
        usage_error = 2,
        infeasible = 3
    };

    auto split_list(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> items;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ','))
            if (! item.empty())
                items.push_back(item);
        return items;
    }

    auto read_json_file(const std::string & path) -> json
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError(0, "cannot open '" + path + "'");
        try {
            return json::parse(in);
        }
        catch (const json::exception & e) {
            throw ParseError(0, "'" + path + "': " + e.what());
        }
    }

    auto graph_summary(const Graph & g) -> json
    {
        const auto p = degree_profile(g);
        return json{{"n", g.order()}, {"m", g.size()}, {"delta", p.delta}, {"Delta", p.Delta},
            {"delta_bar", p.delta_bar}, {"Delta_bar", p.Delta_bar}, {"delta_prime", p.delta_prime}};
    }

    auto run_compute(const std::string & input, const std::string & params, bool oracle) -> int
    {
        const Graph g = read_graph_file(input);
        std::vector<Variant> variants;
        for (const auto & name : split_list(params)) {
            if (name == "all")
                variants.insert(variants.end(), all_variants.begin(), all_variants.end());
            else
                variants.push_back(parse_variant(name));
        }
        if (variants.empty())
            throw ParameterError("--params needs at least one parameter");
        json out = graph_summary(g);
        out["results"] = json::array();
        for (auto v : variants)
            out["results"].push_back(to_json(oracle ? brute_force_value(g, v) : exact_value(g, v)));
        std::cout << out.dump(2) << '\n';
        return success;
    }

    auto run_bound(const std::string & input, const std::vector<std::string> & ids, bool run_audit) -> int
    {
        const Graph g = read_graph_file(input);
        const auto params = bound_params(g);
        json out = graph_summary(g);
        out["beta1"] = *params.beta1;
        out["bounds"] = json::array();
        if (ids.empty())
            for (const auto & r : evaluate_all_bounds(params))
                out["bounds"].push_back(to_json(r));
        else
            for (const auto & id : ids)
                out["bounds"].push_back(to_json(evaluate_bound(params, id)));

        int code = success;
        if (run_audit) {
            const auto violations = audit(g, compute_exact_values(g));
            out["violations"] = json::array();
            for (const auto & v : violations)
                out["violations"].push_back(to_json(v));
            if (failures(violations) > 0)
                code = violation;
        }
        std::cout << out.dump(2) << '\n';
        return code;
    }

    auto run_construct(const std::string & input, const std::string & method, std::optional<double> p,
        std::uint64_t seed, int trials) -> int
    {
        const Graph g = read_graph_file(input);
        const auto outcome = construct_by_name(g, method, p, seed, trials);
        const auto verdict = check_certificate(g, outcome.certificate);
        json out = to_json(outcome);
        out["method"] = method;
        out["verdict"] = to_json(verdict);
        std::cout << out.dump(2) << '\n';
        return verdict.valid && outcome.meets_guarantee() ? success : violation;
    }

    auto run_generate(const std::string & family, int n, int delta, double p, const std::string & parts,
        std::uint64_t seed, const std::string & output, bool dimacs) -> int
    {
        FamilySpec spec;
        spec.family = parse_family(family);
        spec.n = n;
        spec.delta = delta;
        spec.p = p;
        for (const auto & part : split_list(parts))
            spec.parts.push_back(std::stoi(part));
        const Graph g = generate(spec, seed);
        const auto format = dimacs ? GraphFormat::dimacs : GraphFormat::edge_list;
        if (output == "-")
            write_graph(std::cout, g, format);
        else {
            std::ofstream out(output);
            if (! out)
                throw ParameterError("cannot write '" + output + "'");
            write_graph(out, g, format);
        }
        return success;
    }

    auto run_verify(const std::string & input, const std::string & cert_path) -> int
    {
        const Graph g = read_graph_file(input);
        const auto cert = certificate_from_json(read_json_file(cert_path), g.order());
        const auto verdict = check_certificate(g, cert);
        json out = to_json(verdict);
        out["variant"] = std::string(to_string(cert.variant));
        out["value"] = cert.value();
        std::cout << out.dump(2) << '\n';
        return verdict.valid ? success : violation;
    }

    auto run_experiment_command(const std::string & config_path, const std::string & output, std::optional<int> workers) -> int
    {
        auto config = experiment_config_from_json(read_json_file(config_path));
        if (workers)
            config.workers = *workers;
        const auto result = run_experiment(config);
        if (output == "-")
            write_csv(std::cout, result.rows);
        else {
            std::ofstream out(output, std::ios::binary);
            if (! out)
                throw ParameterError("cannot write '" + output + "'");
            write_csv(out, result.rows);
        }
        json summary = json::array();
        for (const auto & s : result.summary)
            summary.push_back(to_json(s));
        (output == "-" ? std::cerr : std::cout) << json{{"summary", summary}, {"violations", result.violations}}.dump(2) << '\n';
        return result.violations > 0 ? violation : success;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Exact domination parameters, bound-achieving constructions and bound audits"};
    app.require_subcommand(1);

    std::string input, params = "all", method, family, output, cert_path, config_path, parts;
    std::vector<std::string> bound_ids;
    bool all_bounds = false, run_audit = false, oracle = false, dimacs = false;
    std::optional<double> p;
    double gen_p = 0.5;
    std::uint64_t seed = 0;
    int trials = 1, n = 0, delta = 0;
    std::optional<int> workers;

    auto * compute = app.add_subcommand("compute", "Exact parameter values with witnesses");
    compute->add_option("--input,-i", input, "Graph file (edge list or DIMACS)")->required();
    compute->add_option("--params", params, "Comma list of gamma,gamma_t,gamma_g,gamma_r,gamma_tr,gamma_R or all");
    compute->add_flag("--oracle", oracle, "Use exhaustive enumeration instead of branch and bound");

    auto * bound = app.add_subcommand("bound", "Evaluate bound formulas");
    bound->add_option("--input,-i", input, "Graph file")->required();
    auto * all_flag = bound->add_flag("--all", all_bounds, "Every catalogued bound (default)");
    bound->add_option("--id", bound_ids, "Bound identifier")->excludes(all_flag);
    bound->add_flag("--audit", run_audit, "Also compute exact values and check every applicable bound");

    auto * construct = app.add_subcommand("construct", "Run a construction");
    construct->add_option("--input,-i", input, "Graph file")->required();
    construct->add_option("--method", method, "Construction method")->required();
    construct->add_option("--p", p, "Sampling probability (default: the bound-matching rate)");
    construct->add_option("--seed", seed, "Seed for random methods");
    construct->add_option("--trials", trials, "Independent trials for random methods")->check(CLI::PositiveNumber);

    auto * gen = app.add_subcommand("generate", "Generate a graph");
    gen->add_option("--family", family, "gnp, alon_global, roman_extremal, path, cycle, complete, disjoint_union")->required();
    gen->add_option("--n", n, "Order");
    gen->add_option("--delta", delta, "Degree parameter for the extremal families");
    gen->add_option("--p", gen_p, "Edge probability for gnp");
    gen->add_option("--parts", parts, "Comma list of clique sizes for disjoint_union");
    gen->add_option("--seed", seed, "Seed")->required();
    gen->add_option("-o,--output", output, "Output file, - for stdout")->required();
    gen->add_flag("--dimacs", dimacs, "Write DIMACS instead of an edge list");

    auto * verify = app.add_subcommand("verify", "Check a certificate file");
    verify->add_option("--input,-i", input, "Graph file")->required();
    verify->add_option("--cert", cert_path, "Certificate JSON")->required();

    auto * experiment = app.add_subcommand("experiment", "Run an experiment configuration");
    experiment->add_option("--config", config_path, "Experiment JSON")->required();
    experiment->add_option("-o,--output", output, "CSV output, - for stdout")->required();
    experiment->add_option("--workers", workers, "Override the configured worker count")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? success : usage_error;
    }

    try {
        if (*compute)
            return run_compute(input, params, oracle);
        if (*bound)
            return run_bound(input, bound_ids, run_audit);
        if (*construct)
            return run_construct(input, method, p, seed, trials);
        if (*gen)
            return run_generate(family, n, delta, gen_p, parts, seed, output, dimacs);
        if (*verify)
            return run_verify(input, cert_path);
        if (*experiment)
            return run_experiment_command(config_path, output, workers);
    }
    catch (const InfeasibleError & e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return infeasible;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}
