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


#include "qacr/experiment.hpp"

#include <filesystem>
#include <set>

#include "json.hpp"
#include "qacr/io.hpp"

namespace qacr {

using nlohmann::json;

std::shared_ptr<const Sampler> make_sampler(const SamplerSpec& spec) {
    std::shared_ptr<const Sampler> inner;
    if (spec.kind == "sa") {
        inner = std::make_shared<SaSampler>(spec.sa);
    } else if (spec.kind == "exact") {
        inner = std::make_shared<ExactSampler>(spec.exact);
    } else {
        throw InputError("unknown sampler kind '" + spec.kind + "'");
    }
    if (!spec.noise) return inner;
    return std::make_shared<NoisySampler>(inner, spec.ranges, *spec.noise);
}

namespace {

void only_keys(const json& obj, const char* what, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw InputError(std::string(what) + ": expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : obj.items()) {
        if (!ok.count(k)) throw InputError(std::string(what) + ": unknown field '" + k + "'");
    }
}

std::string resolve(const std::string& path, const std::string& base_dir) {
    std::filesystem::path p(path);
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    return p.string();
}

template <class T>
T get_or(const json& obj, const char* key, T fallback) {
    return obj.contains(key) ? obj.at(key).get<T>() : fallback;
}

LoadedProblem problem_from(const json& p, const std::string& base_dir) {
    LoadedProblem out;
    out.kind = p.at("kind").get<std::string>();
    if (out.kind == "trivial_ising") {
        only_keys(p, "problem", {"kind", "J", "rescaled"});
        out.model = trivial_ising(p.at("J").get<Bias>(), get_or(p, "rescaled", false));
    } else if (out.kind == "ising") {
        only_keys(p, "problem", {"kind", "path"});
        out.model = read_ising_json(read_text_file(resolve(p.at("path"), base_dir))).model;
    } else if (out.kind == "qubo") {
        only_keys(p, "problem", {"kind", "path"});
        out.model = qubo_to_ising(read_qubo_text(read_text_file(resolve(p.at("path"), base_dir))));
    } else if (out.kind == "mkp") {
        only_keys(p, "problem", {"kind", "path", "lambda", "mu"});
        const auto inst = mkp_parse(read_text_file(resolve(p.at("path"), base_dir)));
        std::int64_t cmax = 1;
        for (auto c : inst.capacities) cmax = std::max(cmax, c);
        out.model = qubo_to_ising(
                mkp_to_qubo(inst, p.at("lambda").get<Bias>(), get_or<std::int64_t>(p, "mu", cmax)).qubo);
        out.checker = mkp_checker(inst);
    } else if (out.kind == "qap") {
        only_keys(p, "problem", {"kind", "path", "lambda", "eps"});
        const auto inst = qap_parse(read_text_file(resolve(p.at("path"), base_dir)));
        out.model = qubo_to_ising(qap_to_qubo(inst, p.at("lambda").get<Bias>(), get_or(p, "eps", 0.0)));
        out.checker = qap_checker(inst);
        out.maximize_objective = false;
    } else if (out.kind == "gka") {
        only_keys(p, "problem", {"kind", "n", "j_range", "h_range", "density", "seed", "integral"});
        GkaParams g;
        g.n = p.at("n").get<std::size_t>();
        if (p.contains("j_range")) std::tie(g.j_lo, g.j_hi) = p.at("j_range").get<std::pair<Bias, Bias>>();
        if (p.contains("h_range")) std::tie(g.h_lo, g.h_hi) = p.at("h_range").get<std::pair<Bias, Bias>>();
        g.density = get_or(p, "density", g.density);
        g.seed = get_or(p, "seed", g.seed);
        g.integral = get_or(p, "integral", g.integral);
        out.model = qubo_to_ising(gka_style_random(g));
    } else {
        throw InputError("unknown problem kind '" + out.kind + "'");
    }
    return out;
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

LoadedProblem load_problem(const std::string& json_text, const std::string& base_dir) {
    const auto doc = parse(json_text, "problem");
    return guarded("problem", [&] { return problem_from(doc, base_dir); });
}

SweepPlan load_sweep_plan(const std::string& json_text, const std::string& base_dir) {
    const auto doc = parse(json_text, "sweep config");
    return guarded("sweep config", [&] {
        only_keys(doc, "sweep config",
                  {"instance", "method", "param", "problem", "reduction", "embedding",
                   "chain_strength_grid", "embedding_seeds", "reads_per_cell", "sampler", "noise",
                   "ranges", "oracle", "truncate_positive_to_zero", "plateau_threshold"});
        SweepPlan plan;
        auto& c = plan.config;
        c.chain_strength_grid = doc.at("chain_strength_grid").get<std::vector<Bias>>();
        c.embedding_seeds = doc.at("embedding_seeds").get<std::vector<std::uint64_t>>();
        c.reads_per_cell = get_or<std::size_t>(doc, "reads_per_cell", c.reads_per_cell);
        c.metrics.truncate_positive_to_zero = get_or(doc, "truncate_positive_to_zero", false);
        if (doc.contains("plateau_threshold") && !doc.at("plateau_threshold").is_null()) {
            c.plateau_threshold = doc.at("plateau_threshold").get<double>();
        }
        c.validate();

        const auto problem = problem_from(doc.at("problem"), base_dir);
        c.metrics.maximize_objective = problem.maximize_objective;
        auto& t = plan.target;
        t.instance = get_or<std::string>(doc, "instance", problem.kind);
        t.method = get_or<std::string>(doc, "method", "direct");
        t.param = get_or<std::string>(doc, "param", "");
        t.original = problem.model;
        t.model = problem.model;
        t.checker = problem.checker;

        if (doc.contains("reduction")) {
            const auto& r = doc.at("reduction");
            only_keys(r, "reduction", {"kind", "bound"});
            if (r.at("kind").get<std::string>() != "iem") throw InputError("reduction: only 'iem' is supported");
            auto red = iem_reduce(problem.model, r.at("bound").get<Bias>());
            t.model = std::move(red.model);
            t.aux = std::move(red.aux);
        }

        const json emb = doc.contains("embedding") ? doc.at("embedding") : json{{"kind", "identity"}};
        only_keys(emb, "embedding", {"kind", "chain_length"});
        const auto ekind = emb.at("kind").get<std::string>();
        if (ekind == "chain_expand") {
            plan.embedder = chain_expand_embedder(emb.at("chain_length").get<std::int64_t>());
        } else if (ekind == "identity") {
            plan.embedder = identity_embedder();
        } else {
            throw InputError("embedding: unknown kind '" + ekind + "'");
        }

        auto& s = plan.sampler;
        if (doc.contains("sampler")) {
            const auto& j = doc.at("sampler");
            only_keys(j, "sampler", {"kind", "sweeps", "beta_start", "beta_end", "auto_beta_range",
                                     "temperature", "max_variables"});
            s.kind = get_or<std::string>(j, "kind", "sa");
            s.sa.sweeps = get_or(j, "sweeps", s.sa.sweeps);
            s.sa.beta_start = get_or(j, "beta_start", s.sa.beta_start);
            s.sa.beta_end = get_or(j, "beta_end", s.sa.beta_end);
            s.sa.auto_beta_range = get_or(j, "auto_beta_range", s.sa.auto_beta_range);
            s.exact.temperature = get_or(j, "temperature", s.exact.temperature);
            s.exact.max_variables = get_or(j, "max_variables", s.exact.max_variables);
        }
        s.sa.num_reads = s.exact.num_reads = c.reads_per_cell;
        if (doc.contains("ranges")) {
            const auto& r = doc.at("ranges");
            only_keys(r, "ranges", {"h", "j"});
            std::tie(s.ranges.h_min, s.ranges.h_max) = r.at("h").get<std::pair<Bias, Bias>>();
            std::tie(s.ranges.j_min, s.ranges.j_max) = r.at("j").get<std::pair<Bias, Bias>>();
            s.ranges.validate();
        }
        if (doc.contains("noise") && !doc.at("noise").is_null()) {
            const auto& n = doc.at("noise");
            only_keys(n, "noise", {"relative_sigma_h", "relative_sigma_j", "distribution", "seed"});
            NoiseModel noise;
            noise.relative_sigma_h = get_or(n, "relative_sigma_h", noise.relative_sigma_h);
            noise.relative_sigma_j = get_or(n, "relative_sigma_j", noise.relative_sigma_j);
            noise.seed = get_or(n, "seed", noise.seed);
            const auto dist = get_or<std::string>(n, "distribution", "gaussian");
            if (dist == "gaussian") {
                noise.distribution = NoiseDistribution::Gaussian;
            } else if (dist == "uniform") {
                noise.distribution = NoiseDistribution::Uniform;
            } else {
                throw InputError("noise: unknown distribution '" + dist + "'");
            }
            noise.validate();
            s.noise = noise;
        }
        plan.sampler_instance = make_sampler(s);

        const json oracle = doc.contains("oracle") ? doc.at("oracle") : json("none");
        if (oracle.is_string()) {
            const auto o = oracle.get<std::string>();
            if (o == "ground_states") {
                t.oracle = ground_states(problem.model);
            } else if (o != "none") {
                throw InputError("oracle: expected 'ground_states', 'none' or an explicit set");
            }
        } else {
            only_keys(oracle, "oracle", {"variables", "states"});
            GroundStates g;
            g.variables = oracle.at("variables").get<std::vector<Variable>>();
            for (const auto& st : oracle.at("states")) {
                auto spins = st.get<std::vector<int>>();
                if (spins.size() != g.variables.size()) throw InputError("oracle: state length mismatch");
                std::vector<Spin> v;
                for (auto x : spins) {
                    if (x != 1 && x != -1) throw InputError("oracle: states hold +1 / -1");
                    v.push_back(static_cast<Spin>(x));
                }
                g.states.push_back(std::move(v));
            }
            t.oracle = std::move(g);
        }
        return plan;
    });
}

}  // namespace qacr
