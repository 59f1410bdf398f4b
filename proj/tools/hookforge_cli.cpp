// Command-line front end. Talks to the library exclusively through the
// C API in hookforge.h; human-readable rendering is done here from the
// JSON reports.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookforge.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

struct ObjectFlags {
    std::string partition;
    std::string tree;
    std::string solid;
    std::string poset;
    std::string ideal;
    bool partition_set = false;
};

void add_object_flags(CLI::App* cmd, ObjectFlags& flags) {
    auto* p = cmd->add_option("--partition", flags.partition,
                              "partition as comma-separated parts, e.g. 4,3,1");
    p->expected(0, 1); // allow --partition "" for the empty diagram
    cmd->callback([&flags, p] { flags.partition_set = p->count() > 0; });
    cmd->add_option("--tree", flags.tree, "rooted tree as a parent array, e.g. 0,1,1,2");
    cmd->add_option("--solid", flags.solid, "solid partition: JSON inline or a file path");
    cmd->add_option("--poset", flags.poset, "poset file (first line n, then 'a < b' lines)");
    cmd->add_option("--ideal", flags.ideal, "tree-product ideal: JSON inline or a file path");
}

std::string slurp_if_file(const std::string& value) {
    if (value.empty() || value[0] == '[' || value[0] == '{' ||
        value.find('\n') != std::string::npos)
        return value;
    std::ifstream in(value);
    if (!in)
        return value; // let the library report the parse failure
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitInputError;
}

int status_to_exit(hf_status status) {
    if (status == HF_OK)
        return kExitOk;
    return fail_input(hf_last_error());
}

// returns nullptr on failure with the error already printed
hf_object* make_object(const ObjectFlags& flags) {
    hf_object* object = nullptr;
    hf_status status = HF_ERR_ARGUMENT;
    int given = 0;
    given += flags.partition_set;
    given += !flags.tree.empty();
    given += !flags.solid.empty();
    given += !flags.poset.empty();
    given += !flags.ideal.empty();
    if (given != 1) {
        fail_input("give exactly one of --partition, --tree, --solid, --poset, --ideal");
        return nullptr;
    }
    if (flags.partition_set)
        status = hf_partition_parse(flags.partition.c_str(), &object);
    else if (!flags.tree.empty())
        status = hf_tree_parse(flags.tree.c_str(), &object);
    else if (!flags.solid.empty())
        status = hf_solid_parse(slurp_if_file(flags.solid).c_str(), &object);
    else if (!flags.poset.empty()) {
        std::ifstream in(flags.poset);
        if (!in) {
            fail_input("cannot read poset file '" + flags.poset + "'");
            return nullptr;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        status = hf_poset_parse(buf.str().c_str(), &object);
    } else {
        status = hf_ideal_parse(slurp_if_file(flags.ideal).c_str(), &object);
    }
    if (status != HF_OK) {
        fail_input(hf_last_error());
        return nullptr;
    }
    return object;
}

std::string describe_object(const json& object) {
    const std::string type = object.value("type", "?");
    std::ostringstream out;
    out << type;
    if (object.contains("parts"))
        out << " " << object["parts"].dump();
    else if (object.contains("parents"))
        out << " " << object["parents"].dump();
    out << " (size " << object.value("size", 0) << ")";
    return out.str();
}

void render_table(const json& table) {
    if (table.empty())
        return;
    const json& first = table.front();
    if (first.contains("cell")) {
        // lay the per-cell values out as the diagram
        int row = 0;
        for (const json& entry : table) {
            const int i = entry["cell"][0].get<int>();
            if (i != row) {
                if (row)
                    std::cout << "\n";
                std::cout << "  ";
                row = i;
            }
            if (entry.contains("star"))
                std::cout << entry["value"].get<std::string>() << "/"
                          << entry["star"].get<std::string>() << " ";
            else
                std::cout << entry["value"] << " ";
        }
        std::cout << "\n";
        return;
    }
    for (const json& entry : table) {
        std::cout << "  ";
        if (entry.contains("vertex"))
            std::cout << "vertex " << entry["vertex"];
        else if (entry.contains("cube"))
            std::cout << "cube " << entry["cube"].dump();
        else if (entry.contains("element"))
            std::cout << "element " << entry["element"].dump();
        std::cout << ": " << entry["value"].dump();
        if (entry.contains("star"))
            std::cout << " / " << entry["star"].dump();
        std::cout << "\n";
    }
}

void render_stats(const json& r) {
    std::cout << "stats for " << describe_object(r["object"]) << ", kind "
              << r["kind"].get<std::string>() << "\n";
    render_table(r["table"]);
    std::cout << "multiset: " << r["multiset"].dump() << "\n";
    std::cout << "sum: " << r["sum"].get<std::string>()
              << "  product: " << r["product"].get<std::string>() << "\n";
    if (r.contains("star_multiset")) {
        std::cout << "starred multiset: " << r["star_multiset"].dump() << "\n";
        std::cout << "starred sum: " << r["star_sum"].get<std::string>()
                  << "  starred product: " << r["star_product"].get<std::string>() << "\n";
        std::cout << "majorization: " << r["majorization"].get<std::string>() << "\n";
    }
}

void render_count(const json& r) {
    std::cout << "count for " << describe_object(r["object"]) << ": "
              << r["count"].get<std::string>() << " (" << r["method"].get<std::string>()
              << ")\n";
    if (r.contains("cross_check")) {
        const json& c = r["cross_check"];
        if (c["linear_extensions"].is_null())
            std::cout << "cross-check: skipped (above the exact-count limit)\n";
        else
            std::cout << "cross-check: " << c["linear_extensions"].get<std::string>()
                      << " linear extensions, "
                      << (c["match"].get<bool>() ? "match" : "MISMATCH") << "\n";
    }
}

void render_shuffle(const json& r) {
    std::cout << "shuffle in " << describe_object(r["object"]) << "\n";
    for (const json& stage : r["stages"])
        std::cout << "  " << stage["label"].get<std::string>() << " = "
                  << stage["members"].dump() << "\n";
    for (const json& check : r["checks"]) {
        std::cout << "  " << check["name"].get<std::string>() << ": ";
        if (check.contains("chain"))
            std::cout << check["chain"].dump() << " monotone";
        else if (check.contains("lhs"))
            std::cout << check["lhs"].dump() << " " << check["relation"].get<std::string>()
                      << " " << check["rhs"].dump();
        std::cout << (check["ok"].get<bool>() ? " [ok]" : " [FAIL]") << "\n";
    }
    std::cout << (r["monotone"].get<bool>() ? "all checks hold\n" : "CHECK FAILED\n");
}

void render_bounds(const json& r) {
    std::cout << "bounds for " << describe_object(r["object"]) << "\n";
    std::cout << "  exact: "
              << (r["exact"].is_null() ? std::string("unavailable")
                                       : r["exact"].get<std::string>())
              << "\n";
    std::cout << "  n!/prod(V):  " << r["bound_v"].get<std::string>() << "\n";
    std::cout << "  n!/prod(V*): " << r["bound_vstar"].get<std::string>() << "\n";
    std::cout << (r["ordering_ok"].get<bool>() ? "  ordering verified\n"
                                               : "  ORDERING VIOLATED\n");
}

void render_verify_one(const json& r) {
    std::printf("%-16s %s  instances=%lld failures=%zu\n",
                r["theorem"].get<std::string>().c_str(),
                r["ok"].get<bool>() ? "ok  " : "FAIL", r["instances"].get<long long>(),
                r["failures"].size());
    for (const json& note : r["notes"])
        std::cout << "    " << note.get<std::string>() << "\n";
    for (const json& failure : r["failures"])
        std::cout << "    counterexample: " << failure["instance"].get<std::string>()
                  << " -- " << failure["detail"].get<std::string>() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hook-statistic and majorization verifier"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON reports");

    ObjectFlags stats_flags, count_flags, shuffle_flags, bounds_flags;
    std::string kind, stats_weight;
    auto* stats_cmd = app.add_subcommand("stats", "per-cell statistic tables and multisets");
    add_object_flags(stats_cmd, stats_flags);
    stats_cmd->add_option("--kind", kind, "statistic kind (see README)");
    stats_cmd->add_option("--weight", stats_weight,
                          "weight: ones, axes, faces, JSON table or a file path");

    auto* count_cmd = app.add_subcommand("count", "exact counts with cross-checks");
    add_object_flags(count_cmd, count_flags);

    std::string theorem = "all";
    int max_n = 0, trials = 0, jobs = 1;
    std::uint64_t seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "run verification sweeps");
    verify_cmd->add_option("--theorem", theorem, "sweep id or 'all'");
    verify_cmd->add_option("--max-n", max_n, "override the sweep size bound");
    verify_cmd->add_option("--trials", trials, "override the random trial count");
    verify_cmd->add_option("--seed", seed, "random seed (default 1)");
    verify_cmd->add_option("--jobs", jobs, "worker threads for sweeps");

    std::string subset, shuffle_weight;
    auto* shuffle_cmd = app.add_subcommand("shuffle", "corner-ward shuffle with trace");
    add_object_flags(shuffle_cmd, shuffle_flags);
    shuffle_cmd->add_option("--subset", subset, "subset to shuffle, JSON")->required();
    shuffle_cmd->add_option("--weight", shuffle_weight, "weight for ideal shuffles");

    auto* bounds_cmd = app.add_subcommand("bounds", "linear-extension bound pair");
    add_object_flags(bounds_cmd, bounds_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    auto run_object_command = [&](const ObjectFlags& flags, auto&& invoke) -> int {
        hf_object* object = make_object(flags);
        if (!object)
            return kExitInputError;
        char* out = nullptr;
        const hf_status status = invoke(object, &out);
        if (status != HF_OK) {
            hf_object_free(object);
            return status_to_exit(status);
        }
        const json report = json::parse(out);
        hf_string_free(out);
        hf_object_free(object);
        if (as_json) {
            std::cout << report.dump(2) << "\n";
        } else if (report["command"] == "stats") {
            render_stats(report);
        } else if (report["command"] == "count") {
            render_count(report);
        } else if (report["command"] == "shuffle") {
            render_shuffle(report);
        } else {
            render_bounds(report);
        }
        return report.value("counterexample", false) ? kExitCounterexample : kExitOk;
    };

    if (stats_cmd->parsed()) {
        const std::string weight = slurp_if_file(stats_weight);
        return run_object_command(stats_flags, [&](hf_object* o, char** out) {
            return hf_stats(o, kind.c_str(), weight.empty() ? nullptr : weight.c_str(), out);
        });
    }
    if (count_cmd->parsed()) {
        return run_object_command(count_flags,
                                  [&](hf_object* o, char** out) { return hf_count(o, out); });
    }
    if (shuffle_cmd->parsed()) {
        const std::string weight = slurp_if_file(shuffle_weight);
        return run_object_command(shuffle_flags, [&](hf_object* o, char** out) {
            return hf_shuffle(o, subset.c_str(), weight.empty() ? nullptr : weight.c_str(),
                              out);
        });
    }
    if (bounds_cmd->parsed()) {
        return run_object_command(bounds_flags,
                                  [&](hf_object* o, char** out) { return hf_bounds(o, out); });
    }

    // verify
    hf_sweep_options options{max_n, trials, seed, jobs};
    char* out = nullptr;
    int found = 0;
    const hf_status status = hf_verify(theorem.c_str(), &options, &out, &found);
    if (status != HF_OK)
        return status_to_exit(status);
    const json report = json::parse(out);
    hf_string_free(out);
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else if (report.is_array()) {
        for (const json& r : report)
            render_verify_one(r);
        std::cout << (found ? "COUNTEREXAMPLE FOUND\n" : "all sweeps passed\n");
    } else {
        render_verify_one(report);
    }
    return found ? kExitCounterexample : kExitOk;
}
