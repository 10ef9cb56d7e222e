#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "opg/census.hpp"

namespace opg {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// One census row: every count for a fixed (n, k) plus the applicable closed
/// forms and whether the enumerated values agree with them.
struct CensusReport {
    int n = 0;
    int k = 0;
    std::uint64_t cycle_count = 0;         // C_{n,k}
    std::uint64_t walk_class_count = 0;    // closed k-walk classes
    std::uint64_t vertices_in_cycles = 0;  // v_{n,k}
    std::uint64_t vertices_in_walks = 0;   // w_{n,k}
    std::map<std::string, std::uint64_t> formula_values;
    std::map<std::string, bool> agreement;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Cycle count and cycle-membership flags from a single enumeration pass.
struct CycleCensus {
    std::uint64_t classes = 0;
    std::vector<std::uint8_t> vertex_flags;
};

inline CycleCensus cycle_census(const OverlapGraph& g, int k, const RunOptions& opts = {}) {
    detail::check_cycle_k(k);
    ExpansionMeter meter(opts.max_expansions);
    using Part = std::pair<std::uint64_t, std::vector<std::uint8_t>>;
    auto chunks = map_chunks<Part>(
        g.vertex_count(), opts.threads, detail::kScanChunk,
        [&](std::uint64_t begin, std::uint64_t end) {
            Part part{0, std::vector<std::uint8_t>(g.vertex_count(), 0)};
            detail::MeterBatch batch(meter);
            for (std::uint64_t s = begin; s < end; ++s)
                detail::cycles_from_start(g, k, s, batch,
                                          [&](const std::uint64_t* vs, const std::uint64_t*) {
                                              ++part.first;
                                              for (int i = 0; i < k; ++i) part.second[vs[i]] = 1;
                                          });
            batch.flush();
            return part;
        });
    CycleCensus out;
    out.vertex_flags.assign(g.vertex_count(), 0);
    for (const auto& [count, flags] : chunks) {
        out.classes = detail::checked_add(out.classes, count);
        for (std::size_t i = 0; i < flags.size(); ++i) out.vertex_flags[i] |= flags[i];
    }
    return out;
}

/// Full census row for one k. Rows with k outside 2..n-1 fall back to graph
/// search for the walk-vertex count, since the window condition is only
/// defined inside that range.
inline CensusReport run_census(const OverlapGraph& g, int k, const RunOptions& opts = {}) {
    CensusReport r;
    r.n = g.n();
    r.k = k;
    const CycleCensus cycles = cycle_census(g, k, opts);
    r.cycle_count = cycles.classes;
    for (std::uint8_t f : cycles.vertex_flags) r.vertices_in_cycles += f;
    r.walk_class_count = count_closed_walk_classes(g, k, opts);
    if (k >= 2 && k <= g.n() - 1)
        r.vertices_in_walks = w_count(g.n(), k, opts);
    else
        r.vertices_in_walks = w_membership_count(g, k, opts);

    const int n = g.n();
    if (k == 2 && n >= 4) {
        r.formula_values["two_cycle_vertices"] = two_cycle_vertex_formula(n);
        r.agreement["two_cycle_vertices"] =
            r.vertices_in_cycles == r.formula_values["two_cycle_vertices"];
        r.formula_values["two_cycle_count"] = two_cycle_count_formula(n);
        r.agreement["two_cycle_count"] = r.cycle_count == r.formula_values["two_cycle_count"];
    }
    if (k >= 2 && k <= n - 1 && n <= 2 * k) {
        r.formula_values["walk_vertices_closed_form"] = w_formula(n, k);
        r.agreement["walk_vertices_closed_form"] =
            r.vertices_in_walks == r.formula_values["walk_vertices_closed_form"];
    }
    if (k >= 3 && k <= n - 1 && n > 2 * k && n % 2 == 1) {
        r.formula_values["walk_vertices_upper_bound"] = w_upper_bound(n, k);
        r.agreement["walk_vertices_upper_bound"] =
            r.vertices_in_walks <= r.formula_values["walk_vertices_upper_bound"];
    }
    if (is_prime(k) && k >= 2 && k <= n - 1) {
        r.formula_values["cycle_vertices_prime_k"] = v_prime_formula(n, k, r.vertices_in_walks);
        r.agreement["cycle_vertices_prime_k"] =
            r.vertices_in_cycles == r.formula_values["cycle_vertices_prime_k"];
    }
    return r;
}

inline nlohmann::ordered_json to_json(const CensusReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["cycles"] = r.cycle_count;
    j["walk_classes"] = r.walk_class_count;
    j["vertices_in_cycles"] = r.vertices_in_cycles;
    j["vertices_in_walks"] = r.vertices_in_walks;
    j["formulas"] = r.formula_values;
    j["agreement"] = r.agreement;
    return j;
}

inline CensusReport census_report_from_json(const nlohmann::json& j) {
    CensusReport r;
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.cycle_count = j.at("cycles").get<std::uint64_t>();
    r.walk_class_count = j.at("walk_classes").get<std::uint64_t>();
    r.vertices_in_cycles = j.at("vertices_in_cycles").get<std::uint64_t>();
    r.vertices_in_walks = j.at("vertices_in_walks").get<std::uint64_t>();
    r.formula_values = j.at("formulas").get<std::map<std::string, std::uint64_t>>();
    r.agreement = j.at("agreement").get<std::map<std::string, bool>>();
    return r;
}

inline constexpr const char* kCensusCsvHeader = "n,k,C,v,w,walk_classes";

inline std::string to_csv_row(const CensusReport& r) {
    return std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.cycle_count) +
           "," + std::to_string(r.vertices_in_cycles) + "," + std::to_string(r.vertices_in_walks) +
           "," + std::to_string(r.walk_class_count);
}

/// Outcome of checking one named claim instance.
struct VerificationRecord {
    enum class Status { pass, fail, skipped_resource };

    std::string claim;
    std::string params;
    std::string predicted;
    std::string computed;
    Status status = Status::fail;

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

inline const char* to_string(VerificationRecord::Status s) {
    switch (s) {
        case VerificationRecord::Status::pass: return "pass";
        case VerificationRecord::Status::fail: return "fail";
        case VerificationRecord::Status::skipped_resource: return "skipped-resource";
    }
    return "?";
}

inline nlohmann::ordered_json to_json(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["params"] = r.params;
    j["predicted"] = r.predicted;
    j["computed"] = r.computed;
    j["status"] = to_string(r.status);
    return j;
}

}  // namespace opg
