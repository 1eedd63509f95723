// Command-line front end over the freespace C API (freespace/freespace.h).
// Exit codes: 0 success, 1 failed assertion or failed report check,
// 2 malformed input or invalid parameters.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "freespace/freespace.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitInput = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

void check_status(fs_status status, const std::string& what) {
    if (status == FS_OK) return;
    int code = status == FS_ERR_CHECK_FAILED ? kExitAssert : kExitInput;
    die(code, what + ": " + fs_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) die(kExitInput, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct OwnedString {
    char* value = nullptr;
    ~OwnedString() { fs_string_free(value); }
    std::string str() const { return value ? value : ""; }
};

struct SpaceHandle {
    fs_space* ptr = nullptr;
    ~SpaceHandle() { fs_space_free(ptr); }
};

struct FunctionHandle {
    fs_function* ptr = nullptr;
    ~FunctionHandle() { fs_function_free(ptr); }
};

struct ElementHandle {
    fs_element* ptr = nullptr;
    ~ElementHandle() { fs_element_free(ptr); }
};

// Shared per-command options.
struct Common {
    std::string space_path;
    std::string out_path;
    std::string format = "json";
    bool assert_mode = false;
};

void load_space(const Common& common, SpaceHandle& space) {
    if (common.space_path.empty()) die(kExitInput, "--space FILE is required");
    check_status(fs_space_parse_json(read_file(common.space_path).c_str(), &space.ptr),
                 common.space_path);
}

int point_index(const SpaceHandle& space, const std::string& label) {
    int index = -1;
    check_status(fs_space_point_index(space.ptr, label.c_str(), &index), "point " + label);
    return index;
}

// Echoes the resolved configuration into the report and writes it out.
void emit_report(const Common& common, json report, const json& config) {
    report["config"] = config;
    const std::string text = report.dump(2) + "\n";
    if (common.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(common.out_path);
    if (!out) die(kExitInput, "cannot write " + common.out_path);
    out << text;
}

// Under --assert the emitted report must re-verify and must not contain a
// refuted verdict where a proven one was asserted; exit 1 otherwise.
int assert_report(const json& report) {
    OwnedString result;
    fs_status status = fs_check_report(report.dump().c_str(), &result.value);
    if (status == FS_ERR_CHECK_FAILED) {
        std::cerr << "assertion failed: report evidence did not re-verify\n" << result.str() << "\n";
        return kExitAssert;
    }
    if (status != FS_OK) die(kExitInput, std::string("cannot re-verify report: ") + fs_last_error());
    if (report.contains("rows") && report.at("kind") == "classification") {
        for (const json& row : report.at("rows"))
            for (const char* column : {"extreme", "denting", "strongly_exposed"})
                if (row.at(column).at("status") == "refuted") {
                    std::cerr << "assertion failed: " << column << " refuted for molecule ("
                              << row.at("molecule").at("x").get<std::string>() << ","
                              << row.at("molecule").at("y").get<std::string>() << ")\n";
                    return kExitAssert;
                }
    }
    return kExitOk;
}

std::string classification_csv(const json& report) {
    std::ostringstream out;
    out << "x,y,extreme,denting,strongly_exposed,exposed_by_fxy,oracle_extreme\n";
    for (const json& row : report.at("rows")) {
        out << row.at("molecule").at("x").get<std::string>() << ','
            << row.at("molecule").at("y").get<std::string>() << ','
            << row.at("extreme").at("status").get<std::string>() << ','
            << row.at("denting").at("status").get<std::string>() << ','
            << row.at("strongly_exposed").at("status").get<std::string>() << ','
            << row.at("exposed_by_fxy").at("status").get<std::string>() << ',';
        if (row.contains("oracle_extreme")) out << (row.at("oracle_extreme").get<bool>() ? "true" : "false");
        else out << "n/a";
        out << '\n';
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"freespace: exact Kantorovich-Rubinstein norms and extremal structure "
                 "of free-space unit balls over finite metric spaces"};
    app.set_version_flag("--version", std::string(fs_version()));
    app.require_subcommand(1);

    Common common;
    std::string gallery_name, snowflake_p, element_path, function_path, alpha, report_path;
    std::vector<std::string> pair_labels;
    std::vector<std::string> eps_grid;
    long depth = 20;
    int gallery_depth = 8;
    int random_count = 0;
    unsigned long long seed = 0;
    bool restrict_molecules = false;
    std::string method = "both";
    std::string arithmetic = "exact";

    auto add_common = [&](CLI::App* cmd, bool needs_space) {
        if (needs_space) cmd->add_option("--space", common.space_path, "space JSON file")->required();
        cmd->add_option("--out", common.out_path, "write the report here instead of stdout");
        cmd->add_option("--format", common.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_flag("--assert", common.assert_mode, "exit 1 unless the emitted report re-verifies");
    };

    CLI::App* cmd_gallery = app.add_subcommand("gallery", "generate a gallery space file");
    cmd_gallery->add_option("--name", gallery_name, "ag|tree_omega|star|nondual|two_row")->required();
    cmd_gallery->add_option("--N", gallery_depth, "family points beyond the base (>= 3)")->required();
    cmd_gallery->add_option("--snowflake", snowflake_p, "apply the p-snowflake, p in (0,1)");
    cmd_gallery->add_option("--arithmetic", arithmetic, "exact|float snowflake distances")
        ->check(CLI::IsMember({"exact", "float"}));
    add_common(cmd_gallery, false);

    CLI::App* cmd_validate = app.add_subcommand("validate", "check the metric axioms of a space file");
    add_common(cmd_validate, true);

    CLI::App* cmd_segment = app.add_subcommand("segment", "compute the metric segment [x,y]");
    cmd_segment->add_option("--pair", pair_labels, "two point labels")->expected(2)->required();
    add_common(cmd_segment, true);

    CLI::App* cmd_norm = app.add_subcommand("norm", "KR norm of a free-space element");
    cmd_norm->add_option("--element", element_path, "element JSON file")->required();
    cmd_norm->add_option("--method", method, "dual|primal|both")
        ->check(CLI::IsMember({"dual", "primal", "both"}));
    add_common(cmd_norm, true);

    CLI::App* cmd_classify = app.add_subcommand("classify", "extremal classification of molecules");
    cmd_classify->add_option("--pair", pair_labels, "classify one ordered molecule")->expected(2);
    cmd_classify->add_option("--depth", depth, "property (Z) search depth");
    cmd_classify->add_option("--eps-grid", eps_grid, "denting eps grid (rationals)");
    add_common(cmd_classify, true);

    CLI::App* cmd_oracle = app.add_subcommand("oracle", "vertices of conv(V) by exact LP");
    add_common(cmd_oracle, true);

    CLI::App* cmd_attain = app.add_subcommand("attain", "strong norm attainment checks");
    cmd_attain->add_option("--function", function_path, "function JSON file");
    cmd_attain->add_option("--random", random_count, "sample this many random functions");
    cmd_attain->add_option("--seed", seed, "RNG seed for --random");
    add_common(cmd_attain, true);

    CLI::App* cmd_slice = app.add_subcommand("slice", "slice molecules and diameter");
    cmd_slice->add_option("--function", function_path, "function JSON file")->required();
    cmd_slice->add_option("--alpha", alpha, "slice width in (0,1]")->required();
    cmd_slice->add_flag("--restrict-molecules", restrict_molecules,
                        "diameter over all slice molecules instead of ball vertices");
    add_common(cmd_slice, true);

    CLI::App* cmd_pair = app.add_subcommand("pair", "pair a function with an element");
    cmd_pair->add_option("--function", function_path, "function JSON file")->required();
    cmd_pair->add_option("--element", element_path, "element JSON file")->required();
    add_common(cmd_pair, true);

    CLI::App* cmd_check = app.add_subcommand("check", "re-verify the evidence in a report");
    cmd_check->add_option("--report", report_path, "report JSON file")->required();
    add_common(cmd_check, false);

    CLI11_PARSE(app, argc, argv);

    try {
        json config{{"format", common.format}, {"assert", common.assert_mode}};
        if (!common.space_path.empty()) config["space"] = common.space_path;

        if (cmd_gallery->parsed()) {
            config["command"] = "gallery";
            config["name"] = gallery_name;
            config["N"] = gallery_depth;
            config["arithmetic"] = arithmetic;
            SpaceHandle space;
            check_status(fs_space_gallery(gallery_name.c_str(), gallery_depth, &space.ptr), gallery_name);
            if (!snowflake_p.empty()) {
                config["snowflake"] = snowflake_p;
                SpaceHandle flaked;
                check_status(fs_space_snowflake(space.ptr, snowflake_p.c_str(),
                                                arithmetic == "float" ? 1 : 0, &flaked.ptr),
                             "snowflake");
                std::swap(space.ptr, flaked.ptr);
            }
            OwnedString text;
            check_status(fs_space_to_json(space.ptr, &text.value), "serialize");
            emit_report(common, json::parse(text.str()), config);
            return kExitOk;
        }

        if (cmd_validate->parsed()) {
            config["command"] = "validate";
            OwnedString text;
            check_status(fs_validate_json(read_file(common.space_path).c_str(), &text.value),
                         common.space_path);
            json report = json::parse(text.str());
            bool valid = report.at("valid").get<bool>();
            emit_report(common, report, config);
            if (!valid) {
                for (const json& violation : report.at("violations"))
                    std::cerr << "violation: " << violation.get<std::string>() << "\n";
                return kExitInput;
            }
            return kExitOk;
        }

        if (cmd_check->parsed()) {
            config["command"] = "check";
            OwnedString result;
            fs_status status = fs_check_report(read_file(report_path).c_str(), &result.value);
            if (status != FS_OK && status != FS_ERR_CHECK_FAILED)
                die(kExitInput, report_path + ": " + fs_last_error());
            emit_report(common, json::parse(result.str()), config);
            return status == FS_OK ? kExitOk : kExitAssert;
        }

        SpaceHandle space;
        load_space(common, space);
        json report;

        if (cmd_segment->parsed()) {
            config["command"] = "segment";
            config["pair"] = pair_labels;
            OwnedString text;
            check_status(fs_segment(space.ptr, point_index(space, pair_labels[0]),
                                    point_index(space, pair_labels[1]), &text.value),
                         "segment");
            report = json::parse(text.str());
        } else if (cmd_norm->parsed()) {
            config["command"] = "norm";
            config["element"] = element_path;
            config["method"] = method;
            ElementHandle element;
            check_status(fs_element_parse_json(space.ptr, read_file(element_path).c_str(), &element.ptr),
                         element_path);
            OwnedString text;
            check_status(fs_norm(space.ptr, element.ptr, method.c_str(), &text.value), "norm");
            report = json::parse(text.str());
        } else if (cmd_classify->parsed()) {
            config["command"] = "classify";
            config["depth"] = depth;
            if (!eps_grid.empty()) config["eps_grid"] = eps_grid;
            std::optional<std::string> grid_json;
            if (!eps_grid.empty()) grid_json = json(eps_grid).dump();
            OwnedString text;
            if (!pair_labels.empty()) {
                config["pair"] = pair_labels;
                check_status(fs_classify_pair(space.ptr, point_index(space, pair_labels[0]),
                                              point_index(space, pair_labels[1]), depth,
                                              grid_json ? grid_json->c_str() : nullptr, &text.value),
                             "classify");
            } else {
                check_status(fs_classify_all(space.ptr, depth,
                                             grid_json ? grid_json->c_str() : nullptr, &text.value),
                             "classify");
            }
            report = json::parse(text.str());
        } else if (cmd_oracle->parsed()) {
            config["command"] = "oracle";
            OwnedString text;
            check_status(fs_oracle(space.ptr, &text.value), "oracle");
            report = json::parse(text.str());
        } else if (cmd_attain->parsed()) {
            config["command"] = "attain";
            if (!function_path.empty() && random_count > 0)
                die(kExitInput, "choose either --function or --random");
            OwnedString text;
            if (!function_path.empty()) {
                config["function"] = function_path;
                FunctionHandle function;
                check_status(
                    fs_function_parse_json(space.ptr, read_file(function_path).c_str(), &function.ptr),
                    function_path);
                check_status(fs_attain_function(space.ptr, function.ptr, &text.value), "attain");
            } else if (random_count > 0) {
                config["random"] = random_count;
                config["seed"] = seed;
                check_status(fs_attain_random(space.ptr, random_count, seed, &text.value), "attain");
            } else {
                die(kExitInput, "attain needs --function FILE or --random K");
            }
            report = json::parse(text.str());
        } else if (cmd_slice->parsed()) {
            config["command"] = "slice";
            config["function"] = function_path;
            config["alpha"] = alpha;
            config["restrict_molecules"] = restrict_molecules;
            FunctionHandle function;
            check_status(
                fs_function_parse_json(space.ptr, read_file(function_path).c_str(), &function.ptr),
                function_path);
            OwnedString text;
            check_status(fs_slice(space.ptr, function.ptr, alpha.c_str(),
                                  restrict_molecules ? 1 : 0, &text.value),
                         "slice");
            report = json::parse(text.str());
        } else if (cmd_pair->parsed()) {
            config["command"] = "pair";
            config["function"] = function_path;
            config["element"] = element_path;
            FunctionHandle function;
            check_status(
                fs_function_parse_json(space.ptr, read_file(function_path).c_str(), &function.ptr),
                function_path);
            ElementHandle element;
            check_status(fs_element_parse_json(space.ptr, read_file(element_path).c_str(), &element.ptr),
                         element_path);
            OwnedString value;
            check_status(fs_pair(function.ptr, element.ptr, &value.value), "pair");
            std::cout << value.str() << "\n";
            return kExitOk;
        } else {
            die(kExitInput, "unknown command");
        }

        int exit_code = kExitOk;
        if (common.assert_mode) {
            exit_code = assert_report(report);
            if (report.contains("all_passed") && !report.at("all_passed").get<bool>())
                exit_code = kExitAssert;
        }
        if (common.format == "csv" && report.at("kind") == "classification") {
            if (common.out_path.empty()) {
                std::cout << classification_csv(report);
            } else {
                std::ofstream out(common.out_path);
                if (!out) die(kExitInput, "cannot write " + common.out_path);
                out << classification_csv(report);
            }
        } else {
            emit_report(common, report, config);
        }
        return exit_code;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
