// mixvol: exact mixed volumes, strict-monotonicity criteria and sparse
// polynomial system audits from the command line.
//
// Exit codes: 0 success, 1 negative verdict (strict monotonicity or a
// failed rank audit), 2 input error, 3 internal cross-check failure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mixvol/io.hpp"

namespace {

using namespace mixvol;

struct Options {
    std::uint64_t seed = 0;
    std::string format = "json";
    bool quiet = false;
    bool timings = false;
};

void emit(const Options& opt, const Json& j) {
    if (!opt.quiet) std::cout << j.dump(2) << "\n";
}

IntVec parse_direction(std::string text) {
    std::string cleaned;
    for (char c : text)
        if (c != '(' && c != ')' && c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c)))
            cleaned.push_back(c);
    IntVec v;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        auto comma = cleaned.find(',', pos);
        std::string part = cleaned.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
        check_input(!part.empty(), "malformed direction '" + text + "'");
        v.push_back(Int(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return v;
}

int cmd_mv(const Options& opt, const std::string& file, const std::string& method,
           const std::string& cells_path, const std::string& emit_path) {
    auto ps = collection_from_json(Json::parse(read_file(file)));
    check_input(ps.size() == ps[0].ambient_dim(),
                "collection must contain exactly dim polytopes");
    if (!emit_path.empty()) write_file(emit_path, collection_to_json(ps).dump(2) + "\n");
    MvMethod m = MvMethod::all;
    if (method == "polarization") m = MvMethod::polarization;
    else if (method == "subdivision") m = MvMethod::subdivision;
    else if (method == "inductive") m = MvMethod::inductive;
    else check_input(method == "all", "unknown method '" + method + "'");
    MvReport report = mixed_volume(ps, m, opt.seed);
    if (!cells_path.empty()) {
        MixedSubdivision ms = pure_mixed_subdivision(ps, opt.seed);
        write_file(cells_path, subdivision_to_json(ms).dump(2) + "\n");
    }
    if (opt.format == "table") {
        if (!opt.quiet) {
            std::cout << "mixed volume:            " << rat_to_string(report.value) << "\n";
            std::cout << "normalized mixed volume: " << rat_to_string(report.normalized)
                      << "\n";
            for (const auto& mr : report.methods) {
                std::cout << "  " << mr.name << ": ";
                if (mr.ran)
                    std::cout << rat_to_string(mr.value) << " (" << mr.microseconds
                              << " us)\n";
                else
                    std::cout << "skipped: " << mr.skip_reason << "\n";
            }
        }
    } else {
        emit(opt, mv_report_to_json(report, opt.timings));
    }
    return 0;
}

int cmd_mono(const Options& opt, const std::string& inner_file,
             const std::string& outer_file, const std::string& equal_file,
             const std::string& deficit, bool volumes) {
    auto ps = collection_from_json(Json::parse(read_file(inner_file)));
    MonotonicityVerdict verdict;
    std::vector<Polytope> qs;
    bool equal_mode = !equal_file.empty();
    check_input(equal_mode != !outer_file.empty(),
                "provide either an outer collection or --equal");
    Json out;
    if (equal_mode) {
        Polytope q = polytope_from_json(Json::parse(read_file(equal_file)));
        verdict = strict_monotonicity_equal(ps, q);
        if (volumes) {
            verdict.lhs_normalized = mixed_volume(ps, MvMethod::all, opt.seed).normalized;
            verdict.rhs_normalized = normalized_volume(q);
        }
        out = verdict_to_json(verdict);
        if (!deficit.empty()) {
            auto bound = deficit_bound_search(ps, q, parse_direction(deficit));
            out["deficit_bound"] = bound ? deficit_to_json(*bound)
                                         : Json("no certified bound for this direction");
        }
    } else {
        qs = collection_from_json(Json::parse(read_file(outer_file)));
        verdict = strict_monotonicity_general(ps, qs);
        // cross-check the equivalent B-body criterion on the way out
        main3_essential_direction(ps, qs);
        if (volumes) {
            verdict.lhs_normalized = mixed_volume(ps, MvMethod::all, opt.seed).normalized;
            verdict.rhs_normalized = mixed_volume(qs, MvMethod::all, opt.seed).normalized;
        }
        check_input(deficit.empty(), "--deficit requires --equal");
        out = verdict_to_json(verdict);
    }
    emit(opt, out);
    return verdict.strict ? 1 : 0;
}

int cmd_system(const Options& opt, const std::string& file, const std::string& emit_path) {
    SparseSystem s = system_from_string(read_file(file));
    for (const auto& w : s.warnings()) std::cerr << "warning: " << w << "\n";
    SystemReport report = analyze(s);
    if (!emit_path.empty()) write_file(emit_path, system_to_json(s).dump(2) + "\n");
    if (opt.format == "table") {
        if (!opt.quiet) {
            std::cout << "n = " << report.n << ", support size = " << report.num_points
                      << "\n";
            std::cout << "BKK bound n!V(P_1,...,P_n) = " << report.bkk.str() << "\n";
            std::cout << "volume bound n!Vol(Q)      = " << report.volume_bound.str()
                      << "\n";
            std::cout << ber_table(report.ber);
            std::cout << "cramer: " << (report.cramer ? "pass" : "fail") << "\n";
            if (!report.cramer_annotation.empty())
                std::cout << "  " << report.cramer_annotation << "\n";
            std::cout << "simplicial: "
                      << system_report_to_json(report)["simplicial"].get<std::string>()
                      << "\n";
            if (opt.timings)
                for (const auto& m : report.mv_methods)
                    if (m.ran)
                        std::cout << "  " << m.name << ": " << m.microseconds << " us\n";
        }
    } else {
        emit(opt, system_report_to_json(report, opt.timings));
    }
    return report.ber.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mixed volumes, monotonicity criteria and sparse system audits"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.seed, "seed for lifting heights (default 0)");
    app.add_option("--format", opt.format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--quiet", opt.quiet, "suppress report output");
    app.add_flag("--timings", opt.timings,
                 "include per-method timings (non-deterministic field) in JSON output");

    std::string mv_file, mv_method = "all", mv_cells, mv_emit;
    auto* mv = app.add_subcommand("mv", "mixed volume of a collection");
    mv->fallthrough();
    mv->add_option("collection", mv_file, "collection JSON file")->required();
    mv->add_option("--method", mv_method, "polarization|subdivision|inductive|all");
    mv->add_option("--cells", mv_cells, "dump the mixed subdivision cells to this file");
    mv->add_option("--emit", mv_emit, "write the parsed collection back as JSON");

    std::string mono_inner, mono_outer, mono_equal, mono_deficit;
    bool mono_volumes = false;
    auto* mono = app.add_subcommand("mono", "strict monotonicity criteria");
    mono->fallthrough();
    mono->add_option("inner", mono_inner, "inner collection JSON file")->required();
    mono->add_option("outer", mono_outer, "outer collection JSON file");
    mono->add_option("--equal", mono_equal, "single outer polytope JSON file");
    mono->add_option("--deficit", mono_deficit,
                     "facet direction for the lattice-distance deficit bound, e.g. \"(0,1)\"");
    mono->add_flag("--volumes", mono_volumes, "also compare the normalized mixed volumes");

    std::string sys_file, sys_emit;
    auto* sys = app.add_subcommand("system", "audit a sparse polynomial system");
    sys->fallthrough();
    sys->add_option("system", sys_file, "system text or matrix JSON file")->required();
    sys->add_option("--emit", sys_emit, "write the parsed system back as matrix JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mv->parsed()) return cmd_mv(opt, mv_file, mv_method, mv_cells, mv_emit);
        if (mono->parsed())
            return cmd_mono(opt, mono_inner, mono_outer, mono_equal, mono_deficit,
                            mono_volumes);
        if (sys->parsed()) return cmd_system(opt, sys_file, sys_emit);
    } catch (const mixvol::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const mixvol::CrossCheckError& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const mixvol::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
