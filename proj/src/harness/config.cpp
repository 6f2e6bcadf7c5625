#include "goatopt/harness.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>

#include <json.hpp>

namespace goatopt::harness {

using nlohmann::json;

const std::vector<std::string>& algorithm_ids() {
    static const std::vector<std::string> ids = {"goa", "pso", "gwo", "ga", "woa", "abc"};
    return ids;
}

bool is_algorithm(std::string_view id) {
    if (id == random_search_id) return true;
    for (const auto& a : algorithm_ids()) {
        if (a == id) return true;
    }
    return false;
}

namespace {

std::string joined(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
    return out;
}

}  // namespace

void SuiteConfig::validate() const {
    if (functions.empty()) throw ValidationError("config lists no functions");
    if (algorithms.empty()) throw ValidationError("config lists no algorithms");
    for (const auto& f : functions) benchmarks::lookup(f);
    for (const auto& a : algorithms) {
        if (!is_algorithm(a)) {
            throw NotFoundError("unknown algorithm '" + a + "'; valid algorithms: " + joined(algorithm_ids()) +
                                " (plus " + std::string(random_search_id) + ")");
        }
    }
    for (const auto* list : {&functions, &algorithms}) {
        std::set<std::string> unique(list->begin(), list->end());
        if (unique.size() != list->size()) throw ValidationError("config lists a name twice: " + joined(*list));
    }
    if (runs < 1) throw ValidationError("runs must be >= 1");
    if (dim < 1) throw ValidationError("dim must be >= 1");
    for (const auto& f : functions) benchmarks::lookup(f).space(dim);
    goa_config(*this).validate();
    for (const auto& a : algorithms) {
        if (a != "goa" && a != random_search_id) {
            baseline_config(*this, baselines::parse_kind(a)).validate();
        }
    }
}

goa::GoaConfig goa_config(const SuiteConfig& cfg) {
    goa::GoaConfig g = cfg.goa;
    g.n = cfg.population;
    g.t_max = cfg.iterations;
    return g;
}

baselines::BaselineConfig baseline_config(const SuiteConfig& cfg, baselines::BaselineKind kind) {
    baselines::BaselineConfig b;
    b.kind = kind;
    b.n = cfg.population;
    b.t_max = cfg.iterations;
    b.pso = cfg.pso;
    b.ga = cfg.ga;
    b.woa = cfg.woa;
    b.abc = cfg.abc;
    return b;
}

namespace {

// Reads object keys into fields, rejecting keys nobody claimed.
class Reader {
public:
    Reader(const json& obj, std::string scope) : obj_(obj), scope_(std::move(scope)) {
        if (!obj_.is_object()) throw ValidationError(scope_ + " must be a JSON object");
    }

    template <typename T>
    void get(const char* key, T& out) {
        seen_.insert(key);
        auto it = obj_.find(key);
        if (it == obj_.end()) return;
        if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>) {
            if (!it->is_number_unsigned()) {
                throw ValidationError("key '" + where(key) + "' must be a non-negative integer");
            }
        }
        try {
            out = it->template get<T>();
        } catch (const json::exception& e) {
            throw ValidationError("bad value for key '" + where(key) + "': " + e.what());
        }
    }

    const json* child(const char* key) {
        seen_.insert(key);
        auto it = obj_.find(key);
        return it == obj_.end() ? nullptr : &*it;
    }

    void finish() const {
        for (auto it = obj_.begin(); it != obj_.end(); ++it) {
            if (!seen_.count(it.key())) {
                std::vector<std::string> valid(seen_.begin(), seen_.end());
                throw ValidationError("unknown key '" + where(it.key()) + "'; valid keys: " + joined(valid));
            }
        }
    }

private:
    std::string where(const std::string& key) const { return scope_.empty() ? key : scope_ + "." + key; }

    const json& obj_;
    std::string scope_;
    std::set<std::string> seen_;
};

void read_goa(const json& j, goa::GoaConfig& g) {
    Reader r(j, "goa");
    r.get("alpha", g.alpha);
    r.get("beta", g.beta);
    r.get("jump_prob", g.jump_prob);
    r.get("jump_mag", g.jump_mag);
    r.get("filter_fraction", g.filter_fraction);
    r.get("epsilon", g.epsilon);
    r.get("delta", g.delta);
    std::string acceptance(goa::to_string(g.acceptance));
    r.get("acceptance", acceptance);
    g.acceptance = goa::parse_acceptance(acceptance);
    r.get("alpha_decay", g.alpha_decay);
    r.finish();
}

void read_pso(const json& j, baselines::PsoParams& p) {
    Reader r(j, "pso");
    r.get("inertia", p.inertia);
    r.get("c1", p.c1);
    r.get("c2", p.c2);
    r.get("velocity_fraction", p.velocity_fraction);
    r.finish();
}

void read_ga(const json& j, baselines::GaParams& p) {
    Reader r(j, "ga");
    r.get("tournament_size", p.tournament_size);
    r.get("crossover_rate", p.crossover_rate);
    r.get("mutation_rate", p.mutation_rate);
    r.get("mutation_scale", p.mutation_scale);
    r.get("elites", p.elites);
    r.finish();
}

void read_woa(const json& j, baselines::WoaParams& p) {
    Reader r(j, "woa");
    r.get("spiral_b", p.spiral_b);
    r.get("spiral_prob", p.spiral_prob);
    r.finish();
}

void read_abc(const json& j, baselines::AbcParams& p) {
    Reader r(j, "abc");
    r.get("limit", p.limit);
    r.finish();
}

SuiteConfig from_json(const json& root) {
    SuiteConfig cfg;
    Reader r(root, "");
    r.get("functions", cfg.functions);
    r.get("algorithms", cfg.algorithms);
    r.get("dim", cfg.dim);
    r.get("runs", cfg.runs);
    r.get("base_seed", cfg.base_seed);
    r.get("population", cfg.population);
    r.get("iterations", cfg.iterations);
    r.get("output_dir", cfg.output_dir);
    if (const json* j = r.child("goa")) read_goa(*j, cfg.goa);
    if (const json* j = r.child("pso")) read_pso(*j, cfg.pso);
    if (const json* j = r.child("gwo")) Reader(*j, "gwo").finish();
    if (const json* j = r.child("ga")) read_ga(*j, cfg.ga);
    if (const json* j = r.child("woa")) read_woa(*j, cfg.woa);
    if (const json* j = r.child("abc")) read_abc(*j, cfg.abc);
    r.finish();
    return cfg;
}

json to_json(const SuiteConfig& cfg) {
    json j;
    j["functions"] = cfg.functions;
    j["algorithms"] = cfg.algorithms;
    j["dim"] = cfg.dim;
    j["runs"] = cfg.runs;
    j["base_seed"] = cfg.base_seed;
    j["population"] = cfg.population;
    j["iterations"] = cfg.iterations;
    j["output_dir"] = cfg.output_dir;
    j["goa"] = {{"alpha", cfg.goa.alpha},
                {"beta", cfg.goa.beta},
                {"jump_prob", cfg.goa.jump_prob},
                {"jump_mag", cfg.goa.jump_mag},
                {"filter_fraction", cfg.goa.filter_fraction},
                {"epsilon", cfg.goa.epsilon},
                {"delta", cfg.goa.delta},
                {"acceptance", std::string(goa::to_string(cfg.goa.acceptance))},
                {"alpha_decay", cfg.goa.alpha_decay}};
    j["pso"] = {{"inertia", cfg.pso.inertia},
                {"c1", cfg.pso.c1},
                {"c2", cfg.pso.c2},
                {"velocity_fraction", cfg.pso.velocity_fraction}};
    j["gwo"] = json::object();
    j["ga"] = {{"tournament_size", cfg.ga.tournament_size},
               {"crossover_rate", cfg.ga.crossover_rate},
               {"mutation_rate", cfg.ga.mutation_rate},
               {"mutation_scale", cfg.ga.mutation_scale},
               {"elites", cfg.ga.elites}};
    j["woa"] = {{"spiral_b", cfg.woa.spiral_b}, {"spiral_prob", cfg.woa.spiral_prob}};
    j["abc"] = {{"limit", cfg.abc.limit}};
    return j;
}

}  // namespace

std::string config_to_json(const SuiteConfig& cfg) { return to_json(cfg).dump(2); }

SuiteConfig parse_config(std::string_view text, std::string_view origin) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return SuiteConfig{};
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("cannot parse config " + std::string(origin) + ": " + e.what());
    }
    if (root.is_object() && root.contains("software_version") && root.contains("config")) {
        return from_json(root.at("config"));
    }
    return from_json(root);
}

SuiteConfig load_config(const std::optional<std::filesystem::path>& path, const ConfigOverrides& flags) {
    SuiteConfig cfg;
    if (path) {
        std::ifstream in(*path);
        if (!in) throw ValidationError("cannot open config file " + path->string());
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = parse_config(buf.str(), path->string());
    }
    if (const char* env = std::getenv(output_dir_env.data()); env && *env) cfg.output_dir = env;

    if (flags.all_functions) cfg.functions = benchmarks::names();
    if (flags.functions) cfg.functions = *flags.functions;
    if (flags.algorithms) cfg.algorithms = *flags.algorithms;
    if (flags.dim) cfg.dim = *flags.dim;
    if (flags.runs) cfg.runs = *flags.runs;
    if (flags.base_seed) cfg.base_seed = *flags.base_seed;
    if (flags.population) cfg.population = *flags.population;
    if (flags.iterations) cfg.iterations = *flags.iterations;
    if (flags.output_dir) cfg.output_dir = *flags.output_dir;
    if (flags.threads) cfg.threads = *flags.threads;
    cfg.validate();
    return cfg;
}

}  // namespace goatopt::harness
