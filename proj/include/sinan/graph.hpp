// Microservice application topology: tiers, per-request-type call paths, the
// shared core pool and the discrete frequency ladder, plus the per-tier
// resource allocation acted on by schedulers.
#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "sinan/errors.hpp"

namespace sinan {

struct DownstreamEdge {
    int tier = -1;         // downstream tier index
    int request_type = -1; // which call path uses this edge
};

struct TierSpec {
    std::string name;
    double base_rate = 0.0;  // requests/s per core at max frequency
    int queue_capacity = 1;  // max waiting requests (bounded queue)
    double mem_base = 0.25;  // memory proxy at empty queue
    std::vector<DownstreamEdge> downstream;
    // request type -> number of visits on that type's call path;
    // derived from the edges when the spec is validated.
    std::map<int, int> visit_cost;
};

struct GraphSpec {
    std::vector<TierSpec> tiers;
    int total_cores = 0;                   // pool size C
    std::vector<double> freq_levels;       // ascending, last entry == 1.0
    std::vector<std::string> request_types;
    int entry_tier = 0;
    double freq_beta = 1.0;    // service rate ~ f^beta
    double mem_slope = 0.002;  // memory proxy per queued request
    int core_quantum = 1;

    // Call path per request type: the ordered tier visit sequence, computed
    // by validate(). Paths are depth-first walks of the typed edges.
    std::vector<std::vector<int>> paths;

    int n_tiers() const { return static_cast<int>(tiers.size()); }
    int n_freq_levels() const { return static_cast<int>(freq_levels.size()); }
    int n_request_types() const { return static_cast<int>(request_types.size()); }

    int tier_index(const std::string& name) const {
        for (int i = 0; i < n_tiers(); ++i)
            if (tiers[i].name == name) return i;
        return -1;
    }

    void validate();
};

// Per-tier core count and frequency-level index (1-based, freq_idx in [1, F]).
struct Allocation {
    std::vector<int> cores;
    std::vector<int> freq_idx;

    int total_cores() const {
        return std::accumulate(cores.begin(), cores.end(), 0);
    }

    bool operator==(const Allocation& other) const = default;
};

inline void validate_allocation(const Allocation& alloc, const GraphSpec& spec) {
    const int n = spec.n_tiers();
    if (static_cast<int>(alloc.cores.size()) != n ||
        static_cast<int>(alloc.freq_idx.size()) != n)
        throw ConfigError("allocation size does not match tier count");
    for (int i = 0; i < n; ++i) {
        if (alloc.cores[i] < spec.core_quantum)
            throw ConfigError("tier " + spec.tiers[i].name +
                              " allocated below one core quantum");
        if (alloc.cores[i] % spec.core_quantum != 0)
            throw ConfigError("tier " + spec.tiers[i].name +
                              " core count not a multiple of the quantum");
        if (alloc.freq_idx[i] < 1 || alloc.freq_idx[i] > spec.n_freq_levels())
            throw ConfigError("tier " + spec.tiers[i].name +
                              " frequency index out of range");
    }
    if (alloc.total_cores() > spec.total_cores)
        throw ConfigError("allocation exceeds the core pool");
}

// Aggregate service rate of a tier: base_rate * cores * f^beta. The per-server
// rate is this divided by cores, so adding cores adds servers, not speed.
inline double service_rate(const TierSpec& tier, int cores, double rel_freq,
                           double beta = 1.0) {
    return tier.base_rate * cores * std::pow(rel_freq, beta);
}

inline void GraphSpec::validate() {
    const int n = n_tiers();
    if (n < 1) throw ConfigError("graph spec has no tiers");
    if (total_cores < n)
        throw ConfigError("core pool smaller than tier count (C < N)");
    if (freq_levels.empty()) throw ConfigError("no frequency levels");
    for (std::size_t i = 1; i < freq_levels.size(); ++i)
        if (freq_levels[i] <= freq_levels[i - 1])
            throw ConfigError("frequency levels must be strictly ascending");
    if (std::abs(freq_levels.back() - 1.0) > 1e-12)
        throw ConfigError("top frequency level must be 1.0");
    if (core_quantum < 1) throw ConfigError("core quantum must be >= 1");
    if (entry_tier < 0 || entry_tier >= n) throw ConfigError("bad entry tier");
    for (const auto& t : tiers) {
        if (t.base_rate <= 0.0)
            throw ConfigError("tier " + t.name + " has non-positive base rate");
        if (t.queue_capacity < 1)
            throw ConfigError("tier " + t.name + " has queue capacity < 1");
        for (const auto& e : t.downstream) {
            if (e.tier < 0 || e.tier >= n)
                throw ConfigError("tier " + t.name + " has an edge to an unknown tier");
            if (e.request_type < 0 || e.request_type >= n_request_types())
                throw ConfigError("tier " + t.name + " has an edge with an unknown request type");
        }
    }

    // Walk each request type's edges depth-first from the entry tier to build
    // the visit sequence; a tier seen while still on the walk stack is a cycle.
    paths.assign(n_request_types(), {});
    for (auto& t : tiers) t.visit_cost.clear();
    for (int rt = 0; rt < n_request_types(); ++rt) {
        std::vector<int> path;
        std::vector<int> on_stack(n, 0);
        auto walk = [&](auto&& self, int tier) -> void {
            if (on_stack[tier])
                throw ConfigError("call path for request type " + request_types[rt] +
                                  " contains a cycle at tier " + tiers[tier].name);
            on_stack[tier] = 1;
            path.push_back(tier);
            for (const auto& e : tiers[tier].downstream)
                if (e.request_type == rt) self(self, e.tier);
            on_stack[tier] = 0;
        };
        walk(walk, entry_tier);
        paths[rt] = path;
        for (int tier : path) tiers[tier].visit_cost[rt] += 1;
    }
}

inline GraphSpec graph_spec_from_json(const nlohmann::json& j) {
    GraphSpec spec;
    try {
        spec.total_cores = j.at("total_cores").get<int>();
        spec.freq_levels = j.at("freq_levels").get<std::vector<double>>();
        spec.request_types = j.at("request_types").get<std::vector<std::string>>();
        spec.freq_beta = j.value("freq_beta", 1.0);
        spec.mem_slope = j.value("mem_slope", 0.002);
        spec.core_quantum = j.value("core_quantum", 1);

        std::vector<nlohmann::json> tier_edges;
        for (const auto& tj : j.at("tiers")) {
            TierSpec t;
            t.name = tj.at("name").get<std::string>();
            t.base_rate = tj.at("base_rate").get<double>();
            t.queue_capacity = tj.value("queue_capacity", 512);
            t.mem_base = tj.value("mem_base", 0.25);
            spec.tiers.push_back(t);
            tier_edges.push_back(tj.value("downstream", nlohmann::json::array()));
        }
        // edges reference tiers by name, so resolve after all tiers exist
        for (std::size_t i = 0; i < tier_edges.size(); ++i) {
            for (const auto& ej : tier_edges[i]) {
                DownstreamEdge e;
                const auto tier_name = ej.at("tier").get<std::string>();
                const auto type_name = ej.at("type").get<std::string>();
                e.tier = spec.tier_index(tier_name);
                if (e.tier < 0)
                    throw ConfigError("downstream edge references unknown tier " + tier_name);
                const auto it = std::find(spec.request_types.begin(),
                                          spec.request_types.end(), type_name);
                if (it == spec.request_types.end())
                    throw ConfigError("downstream edge references unknown request type " + type_name);
                e.request_type = static_cast<int>(it - spec.request_types.begin());
                spec.tiers[i].downstream.push_back(e);
            }
        }
        const auto entry_name = j.value("entry_tier", std::string{});
        spec.entry_tier = entry_name.empty() ? 0 : spec.tier_index(entry_name);
        if (spec.entry_tier < 0)
            throw ConfigError("unknown entry tier " + entry_name);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed graph spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

inline GraphSpec load_graph_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open graph spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("graph spec " + path + " is not valid JSON: " + e.what());
    }
    return graph_spec_from_json(j);
}

// Even split of the core pool at top frequency; the safe starting point for
// schedulers and collection episodes.
inline Allocation full_allocation(const GraphSpec& spec) {
    const int n = spec.n_tiers();
    Allocation a;
    a.cores.assign(n, spec.core_quantum);
    a.freq_idx.assign(n, spec.n_freq_levels());
    int remaining = spec.total_cores - n * spec.core_quantum;
    int i = 0;
    while (remaining >= spec.core_quantum) {
        a.cores[i % n] += spec.core_quantum;
        remaining -= spec.core_quantum;
        ++i;
    }
    return a;
}

} // namespace sinan
