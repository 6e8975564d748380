// Copyright 2026 The qacr Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.


// Command-line front end. Exit codes: 0 success, 1 usage error,
// 2 input or parse error, 3 infeasible request.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qacr/experiment.hpp"
#include "qacr/harness.hpp"
#include "qacr/io.hpp"

namespace {

using namespace qacr;

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kInfeasible = 3;

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

ReductionResult load_model(const std::string& path, bool qubo) {
    const auto text = read_text_file(path);
    if (qubo) return {qubo_to_ising(read_qubo_text(text)), {}};
    return read_ising_json(text);
}

std::string parent_of(const std::string& path) {
    return std::filesystem::path(path).parent_path().string();
}

std::vector<LinearConstraint> read_constraints(const std::string& text) {
    std::vector<LinearConstraint> out;
    try {
        for (const auto& c : nlohmann::json::parse(text)) {
            LinearConstraint g;
            for (const auto& [k, v] : c.at("terms").items()) g.terms[std::stoll(k)] = v.get<Bias>();
            g.constant = c.value("constant", 0.0);
            const auto domain = c.value("domain", std::string("binary"));
            if (domain != "binary" && domain != "spin") throw InputError("constraint domain must be binary or spin");
            g.domain = domain == "binary" ? Domain::Binary : Domain::Spin;
            g.validate();
            out.push_back(std::move(g));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("constraints: ") + e.what());
    } catch (const std::logic_error& e) {
        throw InputError(std::string("constraints: ") + e.what());
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coefficient reduction, embedding and sampling experiments for Ising/QUBO models"};
    app.require_subcommand(1);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Coefficient reduction");
    reduce->require_subcommand(1);

    std::string in, out = "-";
    bool qubo_in = false;
    double bound = 1;
    auto* iem = reduce->add_subcommand("iem", "Split large couplings through auxiliary spins");
    iem->add_option("--in", in, "Ising JSON (or QUBO text with --qubo)")->required();
    iem->add_flag("--qubo", qubo_in, "Input is QUBO text");
    iem->add_option("--bound", bound, "Largest coupling magnitude kept")->required();
    iem->add_option("--out", out, "Output Ising JSON with an aux section");

    std::int64_t lower = 0, upper = 0, mu = 1;
    auto* bce = reduce->add_subcommand("bce", "Bounded-coefficient integer encoding");
    bce->add_option("--lower", lower)->required();
    bce->add_option("--upper", upper)->required();
    bce->add_option("--mu", mu, "Largest digit")->required();
    bce->add_option("--out", out);

    std::string constraints_path;
    double lambda = 1, u = 0;
    auto* alm = reduce->add_subcommand("alm", "Add perturbed penalties for linear constraints");
    alm->add_option("--in", in, "Objective as QUBO text")->required();
    alm->add_option("--constraints", constraints_path,
                    "JSON list of {terms: {var: coef}, constant, domain}")->required();
    alm->add_option("--lambda", lambda, "Penalty coefficient")->required();
    alm->add_option("--u", u, "Lagrange multiplier; eps = -u / (2 lambda)");
    alm->add_option("--out", out, "Output QUBO text");

    // embed
    std::string embedding_path, hardware_path, embedding_out, hardware_out;
    std::int64_t chain_length = 0;
    std::uint64_t seed = 0;
    double chain_strength = 1;
    auto* embed = app.add_subcommand("embed", "Assign physical coefficients for a minor embedding");
    embed->add_option("--in", in, "Logical Ising JSON (or QUBO text with --qubo)")->required();
    embed->add_flag("--qubo", qubo_in);
    embed->add_option("--embedding", embedding_path, "Embedding JSON");
    embed->add_option("--hardware", hardware_path, "Hardware JSON");
    embed->add_option("--chain-length", chain_length, "Synthesize a chain expansion instead");
    embed->add_option("--seed", seed, "Chain expansion seed");
    embed->add_option("--chain-strength", chain_strength)->required();
    embed->add_option("--out", out, "Physical Ising JSON");
    embed->add_option("--embedding-out", embedding_out);
    embed->add_option("--hardware-out", hardware_out);

    // sample
    std::string sampler_kind = "sa";
    SaParams sa;
    ExactParams exact;
    double noise_level = -1;
    std::uint64_t noise_seed = 0;
    auto* sample = app.add_subcommand("sample", "Sample a model");
    sample->add_option("--in", in, "Ising JSON (or QUBO text with --qubo)")->required();
    sample->add_flag("--qubo", qubo_in);
    sample->add_option("--sampler", sampler_kind)->check(CLI::IsMember({"sa", "exact"}));
    sample->add_option("--reads", sa.num_reads);
    sample->add_option("--sweeps", sa.sweeps);
    sample->add_option("--beta-start", sa.beta_start);
    sample->add_option("--beta-end", sa.beta_end);
    sample->add_flag("--auto-beta", sa.auto_beta_range);
    sample->add_option("--temperature", exact.temperature, "Exact sampler temperature (0: ground states)");
    sample->add_option("--seed", seed);
    sample->add_option("--noise", noise_level, "Relative control error; rescales and perturbs every read");
    sample->add_option("--noise-seed", noise_seed);
    sample->add_option("--out", out, "Samples CSV");

    // sweep
    std::string config_path;
    auto* sweep = app.add_subcommand("sweep", "Chain-strength sweep from a JSON config");
    sweep->add_option("--config", config_path)->required();
    sweep->add_option("--out", out, "Metrics CSV");

    // survey
    std::vector<std::string> instances;
    auto* survey = app.add_subcommand("survey", "Scaling factors before and after embedding");
    survey->add_option("instances", instances, "Ising JSON (.json) or QUBO text files")->required();
    survey->add_option("--chain-length", chain_length, "Embed by chain expansion; default uses the clique estimate");
    survey->add_option("--chain-strength", chain_strength);
    survey->add_option("--seed", seed);
    survey->add_option("--out", out, "Survey CSV");

    // check
    std::string problem_kind, instance_path, samples_path;
    auto* check = app.add_subcommand("check", "Feasibility and objective of samples");
    check->add_option("--problem", problem_kind)->required()->check(CLI::IsMember({"mkp", "qap"}));
    check->add_option("--instance", instance_path)->required();
    check->add_option("--samples", samples_path)->required();
    check->add_option("--out", out, "CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (iem->parsed()) {
            const auto model = load_model(in, qubo_in).model;
            const auto r = iem_reduce(model, bound);
            emit(out, write_ising_json(r.model, r.aux));
        } else if (bce->parsed()) {
            const auto enc = bce_encode(lower, upper, mu);
            nlohmann::json doc = {{"lower", lower}, {"upper", upper}, {"mu", mu},
                                  {"coefficients", enc.coefficients}};
            emit(out, doc.dump() + "\n");
        } else if (alm->parsed()) {
            const AlmState state(u, lambda, 2);
            QuboBuilder q;
            q.add_model(read_qubo_text(read_text_file(in)));
            for (const auto& g : read_constraints(read_text_file(constraints_path))) {
                q.add_model(perturbed_penalty(g, lambda, state.epsilon()));
            }
            emit(out, write_qubo_text(q.build()));
        } else if (embed->parsed()) {
            const auto model = load_model(in, qubo_in).model;
            ChainExpansion target;
            if (chain_length > 0) {
                target = chain_expand(model, chain_length, seed);
            } else {
                if (embedding_path.empty() || hardware_path.empty()) {
                    std::cerr << "embed: give --embedding and --hardware, or --chain-length\n";
                    return kUsage;
                }
                target.embedding = read_embedding_json(read_text_file(embedding_path));
                target.hardware = read_hardware_json(read_text_file(hardware_path));
            }
            const auto embedded = assign_coefficients(model, target.embedding, target.hardware, chain_strength);
            emit(out, write_ising_json(embedded.physical));
            if (!embedding_out.empty()) write_text_file(embedding_out, write_embedding_json(target.embedding));
            if (!hardware_out.empty()) write_text_file(hardware_out, write_hardware_json(target.hardware));
        } else if (sample->parsed()) {
            const auto model = load_model(in, qubo_in).model;
            SamplerSpec spec;
            spec.kind = sampler_kind;
            spec.sa = sa;
            spec.sa.seed = seed;
            spec.exact = exact;
            spec.exact.num_reads = sa.num_reads;
            spec.exact.seed = seed;
            if (noise_level >= 0) spec.noise = NoiseModel{noise_level, noise_level, NoiseDistribution::Gaussian, noise_seed};
            emit(out, write_samples_csv(make_sampler(spec)->sample(model)));
        } else if (sweep->parsed()) {
            const auto plan = load_sweep_plan(read_text_file(config_path), parent_of(config_path));
            const auto result = chain_strength_sweep(plan.target, plan.config, plan.embedder, *plan.sampler_instance);
            for (const auto& d : result.diagnostics) std::cerr << d << '\n';
            std::ostringstream csv;
            write_metrics_csv(csv, result.rows);
            emit(out, csv.str());

            std::vector<MetricsRow> pooled;
            for (const auto& r : result.rows) {
                if (r.embedding_seed == "all") pooled.push_back(r);
            }
            if (pooled.empty()) throw InfeasibleError("no embedding seed produced samples");
            const auto rule = plan.config.plateau_threshold ? SelectionRule::Plateau : SelectionRule::ArgminEnergy;
            const auto best = select_chain_strength(pooled, rule, plan.config.plateau_threshold.value_or(0));
            std::cerr << "selected chain strength: " << format_number(best) << '\n';
        } else if (survey->parsed()) {
            std::vector<SurveyItem> items;
            for (const auto& path : instances) {
                const bool json = std::filesystem::path(path).extension() == ".json";
                SurveyItem item{std::filesystem::path(path).filename().string(), load_model(path, !json).model, {}};
                if (chain_length > 0) item.embedding = chain_expand(item.model, chain_length, seed);
                items.push_back(std::move(item));
            }
            std::ostringstream csv;
            write_survey_csv(csv, scaling_survey(items, AcceptRanges::dwave_advantage(), chain_strength));
            emit(out, csv.str());
        } else if (check->parsed()) {
            const auto text = read_text_file(instance_path);
            const auto checker = problem_kind == "mkp" ? mkp_checker(mkp_parse(text)) : qap_checker(qap_parse(text));
            const auto samples = read_samples_csv(read_text_file(samples_path));
            std::ostringstream csv;
            csv << "record,feasible,objective,occurrences\n";
            for (std::size_t i = 0; i < samples.size(); ++i) {
                const auto& r = samples.records()[i];
                const auto c = checker(samples.variables(), r.spins);
                csv << i << ',' << (c.feasible ? 1 : 0) << ',' << format_number(c.objective) << ','
                    << r.occurrences << '\n';
            }
            emit(out, csv.str());
        }
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return 0;
}
