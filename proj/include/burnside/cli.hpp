#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burnside/catfile.hpp"
#include "burnside/catgen.hpp"
#include "burnside/report.hpp"
#include "burnside/stirling.hpp"
#include "burnside/verify.hpp"

namespace burnside::cli {

namespace detail {

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatFileError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_output(const std::string& path, const std::string& body, std::ostream& out) {
    if (path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw CatFileError("cannot open file for writing: " + path);
    file << body;
}

/// Cayley file: {"elements": [labels], "table": [[row-major indices]]}.
inline Group parse_cayley_file(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_input(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw CatFileError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("table"))
        throw CatFileError("Cayley file needs \"elements\" and \"table\"");
    if (!doc["elements"].is_array() || !doc["table"].is_array())
        throw CatFileError("Cayley file: \"elements\" and \"table\" must be arrays");
    std::vector<std::string> elements;
    for (const auto& e : doc["elements"]) {
        if (!e.is_string()) throw CatFileError("Cayley file: element labels must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::vector<int>> table;
    for (const auto& row : doc["table"]) {
        if (!row.is_array()) throw CatFileError("Cayley file: table rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw CatFileError("Cayley file: table entries must be integers");
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    std::string label = path == "-" ? "G" : std::filesystem::path(path).stem().string();
    return group_from_cayley(label, std::move(elements), table);
}

inline std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : csv) {
        if (ch == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    parts.push_back(current);
    return parts;
}

}  // namespace detail

/// Entry point behind main(). args excludes the program name.
/// Exit codes: 0 success, 1 validation failure, 2 no factorization system,
/// 3 I/O or parse error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rational abstract Burnside rings of finite skeletal categories"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a category file");
    gen->require_subcommand(1);
    int epi_d = 0;
    std::string gen_output;
    auto* gen_epi_cmd = gen->add_subcommand("epi", "epimorphisms of sets of size <= d");
    gen_epi_cmd->add_option("--d", epi_d, "largest set size")
        ->required()
        ->check(CLI::Range(1, 6));
    gen_epi_cmd->add_option("-o,--output", gen_output, "output file (default stdout)");

    int cyclic_n = 0;
    std::string cayley_path;
    auto* gen_orbit_cmd = gen->add_subcommand("orbit", "orbit category of a finite group");
    auto* cyclic_opt =
        gen_orbit_cmd->add_option("--cyclic", cyclic_n, "cyclic group of this order")
            ->check(CLI::Range(1, kGroupOrderCap));
    auto* cayley_opt =
        gen_orbit_cmd->add_option("--cayley", cayley_path, "Cayley table JSON file");
    cyclic_opt->excludes(cayley_opt);
    gen_orbit_cmd->add_option("-o,--output", gen_output, "output file (default stdout)");

    std::string analyze_path;
    ReportOptions opts;
    auto* analyze_cmd = app.add_subcommand("analyze", "full report on a category file");
    analyze_cmd->add_option("file", analyze_path, "category file, - for stdin")->required();
    analyze_cmd->add_flag("--json", opts.json, "emit JSON");
    analyze_cmd->add_flag("--eam", opts.eam, "E, A, M matrices and the H = EAM check");
    analyze_cmd->add_flag("--idempotents", opts.idempotents, "idempotent table");
    analyze_cmd->add_flag("--mult-table", opts.mult_table, "basis products");
    analyze_cmd->add_flag("--det", opts.det, "determinant and automorphism product");

    std::string restrict_path, restrict_objects;
    bool restrict_json = false;
    auto* restrict_cmd =
        app.add_subcommand("restrict", "restriction to a full subcategory and its kernel");
    restrict_cmd->add_option("file", restrict_path, "category file, - for stdin")->required();
    restrict_cmd->add_option("--objects", restrict_objects, "comma-separated object labels")
        ->required();
    restrict_cmd->add_flag("--json", restrict_json, "emit JSON");

    int stirling_d = 0;
    auto* stirling_cmd =
        app.add_subcommand("stirling", "closed-form hom matrix without building the category");
    stirling_cmd->add_option("--d", stirling_d, "largest set size")
        ->required()
        ->check(CLI::Range(1, 64));

    auto* verify_cmd = app.add_subcommand("verify-paper", "recheck the built-in golden tables");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }

    try {
        if (gen->parsed()) {
            FinCat cat;
            if (gen_epi_cmd->parsed()) {
                cat = burnside::gen_epi(epi_d);
            } else {
                if (!cyclic_opt->count() && !cayley_opt->count()) {
                    err << "error: gen orbit needs --cyclic or --cayley\n";
                    return kExitIo;
                }
                Group group = cyclic_opt->count() ? gen_cyclic(cyclic_n)
                                                  : detail::parse_cayley_file(cayley_path);
                cat = gen_orbit_category(group);
            }
            detail::write_output(gen_output, serialize_catfile(cat), out);
            return kExitOk;
        }

        if (analyze_cmd->parsed()) {
            ParsedCatFile parsed = parse_catfile(detail::read_input(analyze_path));
            Outcome outcome = analyze_category(std::move(parsed.cat), parsed.fs, opts);
            out << outcome.body;
            return outcome.exit_code;
        }

        if (restrict_cmd->parsed()) {
            ParsedCatFile parsed = parse_catfile(detail::read_input(restrict_path));
            Outcome outcome = restrict_category(std::move(parsed.cat), parsed.fs,
                                                detail::split_csv(restrict_objects),
                                                restrict_json);
            out << outcome.body;
            return outcome.exit_code;
        }

        if (stirling_cmd->parsed()) {
            RatMatrix h = epi_hom_closed_form(stirling_d);
            auto last = epi_inverse_last_row(stirling_d);
            std::ostringstream os;
            os << "Epi<=" << stirling_d << " hom matrix (surjection counts):\n";
            report_detail_render_matrix(os, h);
            RatMatrix row(1, last.size());
            for (std::size_t k = 0; k < last.size(); ++k) row(0, k) = last[k];
            os << "last row of H^-1:\n";
            report_detail_render_matrix(os, row);
            out << os.str();
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            return verify_paper(out) == 0 ? kExitOk : kExitInvalid;
        }
    } catch (const CatFileError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitNoFactorization;
    }
    return kExitOk;
}

}  // namespace burnside::cli
