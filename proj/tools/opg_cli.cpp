// Command line frontend: build overlap graphs, run censuses, verify the
// counting claims, classify vertices, construct walks, and export graphs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// limit breached.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opg/census.hpp"
#include "opg/claims.hpp"
#include "opg/export.hpp"
#include "opg/overlap_graph.hpp"
#include "opg/report.hpp"
#include "opg/walk_theory.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int k = std::stoi(text);
        return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--pairs", "expected n:k entries, got '" + tok + "'");
        pairs.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
    }
    return pairs;
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << content;
}

std::optional<std::filesystem::path> cache_dir(bool no_cache) {
    if (no_cache) return std::nullopt;
    if (const char* env = std::getenv("OPG_CACHE_DIR")) return std::filesystem::path(env);
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "opg";
    return std::nullopt;
}

std::optional<opg::CensusReport> cache_load(const std::optional<std::filesystem::path>& dir,
                                            int n, int k) {
    if (!dir) return std::nullopt;
    const auto file = *dir / ("census-v" + std::to_string(opg::kReportSchemaVersion) + "-" +
                              opg::kVersion + "-n" + std::to_string(n) + "-k" +
                              std::to_string(k) + ".json");
    std::ifstream is(file);
    if (!is) return std::nullopt;
    try {
        nlohmann::json j;
        is >> j;
        return opg::census_report_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;  // stale or corrupt entry; recompute
    }
}

void cache_store(const std::optional<std::filesystem::path>& dir, const opg::CensusReport& r) {
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec) return;
    const auto file = *dir / ("census-v" + std::to_string(opg::kReportSchemaVersion) + "-" +
                              opg::kVersion + "-n" + std::to_string(r.n) + "-k" +
                              std::to_string(r.k) + ".json");
    std::ofstream os(file, std::ios::binary);
    if (os) os << opg::to_json(r).dump(2) << "\n";
}

struct CensusArgs {
    int n = 0;
    std::string k_range;
    std::string format = "text";
    std::string out;
    int threads = 0;
    std::uint64_t limit = 0;
    bool no_cache = false;
};

int run_census_command(const CensusArgs& args) {
    const auto [k_lo, k_hi] = parse_range(args.k_range);
    if (args.n < 2 || k_lo < 1 || k_hi < k_lo) {
        std::cerr << "census: need n >= 2 and a k range within 1..n\n";
        return kExitUsage;
    }
    const opg::RunOptions run{args.threads, args.limit};
    const auto dir = cache_dir(args.no_cache);
    std::vector<opg::CensusReport> rows;
    bool partial = false;
    std::string breach;
    opg::OverlapGraph graph;
    bool graph_built = false;
    for (int k = k_lo; k <= k_hi && !partial; ++k) {
        if (auto cached = cache_load(dir, args.n, k)) {
            rows.push_back(*cached);
            continue;
        }
        try {
            if (!graph_built) {
                graph = opg::OverlapGraph::build(args.n);
                graph_built = true;
            }
            rows.push_back(opg::run_census(graph, k, run));
            cache_store(dir, rows.back());
        } catch (const opg::resource_limit_error& e) {
            partial = true;
            breach = e.what();
        }
    }

    std::string content;
    if (args.format == "csv") {
        std::string s = std::string(opg::kCensusCsvHeader) + "\n";
        for (const auto& r : rows) s += opg::to_csv_row(r) + "\n";
        content = s;
    } else if (args.format == "json") {
        nlohmann::ordered_json doc;
        doc["version"] = opg::kReportSchemaVersion;
        doc["n"] = args.n;
        doc["k"] = {k_lo, k_hi};
        if (partial) doc["partial"] = true;
        auto& results = doc["results"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) results.push_back(opg::to_json(r));
        content = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "census of the overlap graph, n = " << args.n << "\n";
        os << "  k | cycles C | vertices in cycles v | vertices in walks w | walk classes\n";
        for (const auto& r : rows) {
            os << "  " << r.k << " | " << r.cycle_count << " | " << r.vertices_in_cycles << " | "
               << r.vertices_in_walks << " | " << r.walk_class_count << "\n";
            for (const auto& [name, value] : r.formula_values)
                os << "      " << name << " = " << value << " ["
                   << (r.agreement.at(name) ? "agrees" : "DISAGREES") << "]\n";
        }
        if (partial) os << "  (partial: " << breach << ")\n";
        content = os.str();
    }
    write_output(content, args.out);
    if (partial) {
        std::cerr << "census: resource limit breached: " << breach << "\n";
        return kExitResource;
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string claims;
    std::string n_range;
    std::string pairs;
    std::string format = "text";
    std::string out;
    int threads = 0;
    std::uint64_t limit = 0;
    bool skip_long = false;
};

int run_verify_command(const VerifyArgs& args) {
    opg::ClaimParams params;
    params.run = opg::RunOptions{args.threads, args.limit};
    params.skip_long = args.skip_long;
    if (!args.n_range.empty()) params.n_range = parse_range(args.n_range);
    if (!args.pairs.empty()) params.pairs = parse_pairs(args.pairs);

    std::vector<std::string> ids;
    if (args.claims.empty()) {
        for (const auto& c : opg::all_claims()) ids.push_back(c.id);
    } else {
        std::stringstream ss(args.claims);
        std::string tok;
        while (std::getline(ss, tok, ',')) ids.push_back(tok);
    }

    opg::GraphCache cache;
    std::vector<opg::VerificationRecord> records;
    try {
        records = opg::run_claims(ids, cache, params);
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
    }

    bool any_fail = false;
    for (const auto& r : records) any_fail |= r.status == opg::VerificationRecord::Status::fail;

    std::string content;
    if (args.format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& r : records) doc.push_back(opg::to_json(r));
        content = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& r : records)
            os << "[" << opg::to_string(r.status) << "] " << r.claim << " (" << r.params
               << "): predicted " << r.predicted << ", computed " << r.computed << "\n";
        std::size_t passes = 0, fails = 0, skips = 0;
        for (const auto& r : records) {
            passes += r.status == opg::VerificationRecord::Status::pass;
            fails += r.status == opg::VerificationRecord::Status::fail;
            skips += r.status == opg::VerificationRecord::Status::skipped_resource;
        }
        os << records.size() << " records: " << passes << " pass, " << fails << " fail, " << skips
           << " skipped\n";
        content = os.str();
    }
    write_output(content, args.out);
    return any_fail ? kExitVerificationFailure : kExitOk;
}

struct ClassifyArgs {
    std::string perm;
    std::string k_range;
    std::string format = "text";
};

int run_classify_command(const ClassifyArgs& args) {
    opg::Permutation a;
    try {
        a = opg::parse_permutation(args.perm);
    } catch (const std::exception& e) {
        std::cerr << "classify: " << e.what() << "\n";
        return kExitUsage;
    }
    const int n = static_cast<int>(a.size());
    int k_lo = 2, k_hi = std::max(2, n - 1);
    if (!args.k_range.empty()) {
        auto [lo, hi] = parse_range(args.k_range);
        k_lo = lo;
        k_hi = hi;
    }
    if (n < 3 || k_lo < 2 || k_hi > n - 1 || k_hi < k_lo) {
        std::cerr << "classify: k must lie within 2.." << n - 1 << " for a length-" << n
                  << " permutation\n";
        return kExitUsage;
    }

    nlohmann::ordered_json doc;
    doc["perm"] = opg::to_string(a);
    doc["trivial"] = opg::is_trivial(a);
    doc["alternating"] = opg::is_alternating(a);
    auto& rows = doc["k"] = nlohmann::ordered_json::array();
    for (int k = k_lo; k <= k_hi; ++k) {
        nlohmann::ordered_json row;
        row["k"] = k;
        const auto profile = opg::overlap_profile(a, k);
        row["y"] = opg::to_string(profile.y);
        row["z"] = opg::to_string(profile.z);
        const bool in_walk = opg::closed_walk_condition(a, k);
        row["closed_walk_condition"] = in_walk;
        // the branching guarantees presuppose membership in a closed k-walk
        row["branching_small_n_m"] = nullptr;
        row["branching_general_m"] = nullptr;
        if (in_walk) {
            if (const auto small = opg::branching_condition_small_n(a, k))
                row["branching_small_n_m"] = *small;
            if (const auto witness = opg::branching_condition_general_witness(a, k)) {
                row["branching_general_m"] = witness->m;
                row["branching_general_witness"] = {
                    {"i", witness->i}, {"j", witness->j}, {"ells", witness->ells}};
            }
        }
        const auto tag = opg::forbidden_by_lemma(a, k);
        row["forbidden"] =
            tag ? nlohmann::ordered_json(std::string(1, opg::to_char(*tag)))
                : nlohmann::ordered_json(nullptr);
        rows.push_back(std::move(row));
    }

    if (args.format == "json") {
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "permutation " << opg::to_string(a) << " (n = " << n << ")\n";
    std::cout << "  trivial: " << (doc["trivial"].get<bool>() ? "yes" : "no")
              << ", alternating: " << (doc["alternating"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& row : rows) {
        std::cout << "  k = " << row["k"] << ": condition "
                  << (row["closed_walk_condition"].get<bool>() ? "holds" : "fails")
                  << " (y = " << row["y"].get<std::string>()
                  << ", z = " << row["z"].get<std::string>() << ")";
        if (!row["branching_small_n_m"].is_null())
            std::cout << ", small-n branching m = " << row["branching_small_n_m"];
        if (!row["branching_general_m"].is_null())
            std::cout << ", general branching m = " << row["branching_general_m"];
        if (!row["forbidden"].is_null())
            std::cout << ", excluded by condition (" << row["forbidden"].get<std::string>()
                      << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

struct WalkArgs {
    std::string perm;
    int k = 0;
    std::string mode = "construct";
    int threads = 0;
    std::uint64_t limit = 0;
};

void print_walk(const opg::Walk& w) {
    std::cout << "  vertices:";
    for (const auto& v : w.vertices) std::cout << " " << opg::to_string(v);
    std::cout << "\n  edges:   ";
    for (const auto& e : w.edges) std::cout << " " << opg::to_string(e);
    std::cout << "\n";
}

int run_walk_command(const WalkArgs& args) {
    opg::Permutation a;
    try {
        a = opg::parse_permutation(args.perm);
    } catch (const std::exception& e) {
        std::cerr << "walk: " << e.what() << "\n";
        return kExitUsage;
    }
    const int n = static_cast<int>(a.size());
    if (args.k < 2 || args.k > n - 1) {
        std::cerr << "walk: k must lie within 2.." << n - 1 << "\n";
        return kExitUsage;
    }
    if (args.mode == "construct") {
        if (!opg::closed_walk_condition(a, args.k)) {
            const std::size_t len = a.size() - static_cast<std::size_t>(args.k);
            std::cerr << "walk: " << opg::to_string(a) << " admits no closed " << args.k
                      << "-walk: st(first " << len
                      << ") = " << opg::to_string(opg::pattern(a, 0, len)) << " but st(last "
                      << len << ") = "
                      << opg::to_string(opg::pattern(a, static_cast<std::size_t>(args.k), len))
                      << "\n";
            return kExitVerificationFailure;
        }
        const opg::ClosedWalkClass c = opg::build_closed_walk(a, args.k);
        std::cout << "closed " << args.k << "-walk through " << opg::to_string(a)
                  << (c.is_cycle() ? " (a cycle)" : " (not a cycle)") << "\n";
        print_walk(c.to_walk());
        return kExitOk;
    }
    if (args.mode != "exhaustive") {
        std::cerr << "walk: mode must be construct or exhaustive\n";
        return kExitUsage;
    }
    try {
        const opg::OverlapGraph g = opg::OverlapGraph::build(n);
        const auto classes =
            opg::closed_walks_through(g, a, args.k, opg::RunOptions{args.threads, args.limit});
        std::set<std::vector<std::uint64_t>> sequences;
        std::size_t cycles = 0;
        for (const auto& c : classes) {
            sequences.insert(opg::canonical_vertex_sequence(c));
            cycles += c.is_cycle();
        }
        std::cout << "closed " << args.k << "-walk classes through " << opg::to_string(a) << ": "
                  << sequences.size() << " vertex sequences (" << classes.size()
                  << " with edge multiplicity, " << cycles << " cycles)\n";
        for (const auto& c : classes) {
            std::cout << (c.is_cycle() ? "cycle:" : "walk: ") << "\n";
            print_walk(c.to_walk());
        }
        return kExitOk;
    } catch (const opg::resource_limit_error& e) {
        std::cerr << "walk: " << e.what() << "\n";
        return kExitResource;
    }
}

struct ExportArgs {
    int n = 0;
    std::string format = "dot";
    std::string out;
};

int run_export_command(const ExportArgs& args) {
    const int cap = args.format == "dot" ? 6 : opg::OverlapGraph::kEagerMaxN;
    if (args.n > cap) {
        std::cerr << "export: n = " << args.n << " too large for format '" << args.format
                  << "' (cap " << cap << ")\n";
        return kExitResource;
    }
    try {
        const opg::OverlapGraph g = opg::OverlapGraph::build(args.n);
        std::string content;
        if (args.format == "dot") {
            std::ostringstream os;
            opg::write_dot(os, g);
            content = os.str();
        } else if (args.format == "json") {
            content = opg::graph_to_json(g).dump(2) + "\n";
        } else {
            std::cerr << "export: format must be dot or json\n";
            return kExitUsage;
        }
        write_output(content, args.out);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "export: " << e.what() << "\n";
        return kExitResource;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"overlapping-permutation graph toolkit"};
    app.set_version_flag("--version", opg::kVersion);
    app.require_subcommand(1);

    CensusArgs census;
    auto* census_cmd = app.add_subcommand("census", "count cycles and closed walks");
    census_cmd->add_option("--n", census.n, "permutation length")->required();
    census_cmd->add_option("--k", census.k_range, "cycle length or range lo..hi")->required();
    census_cmd->add_option("--format", census.format, "text | json | csv");
    census_cmd->add_option("--out", census.out, "output path (default stdout)");
    census_cmd->add_option("--threads", census.threads, "worker threads (0 = hardware)");
    census_cmd->add_option("--limit", census.limit, "node expansion budget (0 = unlimited)");
    census_cmd->add_flag("--no-cache", census.no_cache, "bypass the census cache");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "check the counting claims");
    verify_cmd->add_option("--claims", verify.claims, "comma separated claim ids (default all)");
    verify_cmd->add_option("--n", verify.n_range, "override the n range, e.g. 4..8");
    verify_cmd->add_option("--pairs", verify.pairs, "override (n,k) pairs, e.g. 7:3,9:4");
    verify_cmd->add_option("--format", verify.format, "text | json");
    verify_cmd->add_option("--out", verify.out, "output path (default stdout)");
    verify_cmd->add_option("--threads", verify.threads, "worker threads (0 = hardware)");
    verify_cmd->add_option("--limit", verify.limit, "node expansion budget (0 = unlimited)");
    verify_cmd->add_flag("--skip-long", verify.skip_long, "skip the long-running checks");

    ClassifyArgs classify;
    auto* classify_cmd = app.add_subcommand("classify", "walk predicates for one vertex");
    classify_cmd->add_option("--perm", classify.perm, "the permutation")->required();
    classify_cmd->add_option("--k", classify.k_range, "walk length or range (default 2..n-1)");
    classify_cmd->add_option("--format", classify.format, "text | json");

    WalkArgs walk;
    auto* walk_cmd = app.add_subcommand("walk", "construct or list closed walks");
    walk_cmd->add_option("--perm", walk.perm, "the starting permutation")->required();
    walk_cmd->add_option("--k", walk.k, "walk length")->required();
    walk_cmd->add_option("--mode", walk.mode, "construct | exhaustive");
    walk_cmd->add_option("--threads", walk.threads, "worker threads (0 = hardware)");
    walk_cmd->add_option("--limit", walk.limit, "node expansion budget (0 = unlimited)");

    ExportArgs export_args;
    auto* export_cmd = app.add_subcommand("export", "write the graph as DOT or JSON");
    export_cmd->add_option("--n", export_args.n, "permutation length")->required();
    export_cmd->add_option("--format", export_args.format, "dot | json");
    export_cmd->add_option("--out", export_args.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (census_cmd->parsed()) return run_census_command(census);
        if (verify_cmd->parsed()) return run_verify_command(verify);
        if (classify_cmd->parsed()) return run_classify_command(classify);
        if (walk_cmd->parsed()) return run_walk_command(walk);
        if (export_cmd->parsed()) return run_export_command(export_args);
    } catch (const opg::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
