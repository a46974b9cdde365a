#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "squeeze/gin.hpp"
#include "squeeze/io.hpp"
#include "squeeze/operators.hpp"
#include "squeeze/verify.hpp"

using json = nlohmann::ordered_json;
using namespace squeeze;

namespace {

// Exit codes: 0 success, 1 mathematical verification failure, 2 usage,
// 3 guard/size limits.
constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct CommonOpts {
    std::uint64_t seed = 1;
    bool seed_given = false;
    std::string field = "q";
    std::string out;
};

std::uint64_t effective_seed(const CommonOpts& opts) {
    if (opts.seed_given) return opts.seed;
    if (const char* env = std::getenv("SQUEEZE_SEED")) return std::strtoull(env, nullptr, 10);
    return opts.seed;
}

json meta(const CommonOpts& opts, const std::vector<std::string>& input_paths,
          bool uses_seed = false) {
    json m;
    m["version"] = kVersion;
    if (uses_seed) {
        m["seed"] = effective_seed(opts);
        m["field"] = opts.field;
    }
    json inputs = json::array();
    for (const auto& path : input_paths) {
        json entry;
        entry["path"] = path;
        entry["fnv1a64"] = fnv1a64_hex(read_file(path));
        inputs.push_back(entry);
    }
    if (!inputs.empty()) m["inputs"] = inputs;
    return m;
}

void emit(const json& report, const CommonOpts& opts) {
    if (opts.out.empty()) {
        std::cout << report.dump(2) << std::endl;
    } else {
        std::ofstream file(opts.out);
        if (!file) throw std::invalid_argument("cannot write " + opts.out);
        file << report.dump(2) << '\n';
    }
}

json facets_json(const SimplicialComplex& complex) {
    json out = json::array();
    for (const auto& f : complex.facets()) out.push_back(f);
    return out;
}

json complex_json(const SimplicialComplex& complex) {
    FHGVectors v = fhg_vectors(complex);
    json out;
    out["facets"] = facets_json(complex);
    out["f"] = v.f;
    out["h"] = v.h;
    out["g"] = v.g;
    return out;
}

json betti_json(const BettiTable& table) {
    json out = json::array();
    for (const auto& [key, val] : table.entries()) {
        json entry;
        entry["i"] = key.first;
        entry["j"] = key.second;
        entry["value"] = val;
        out.push_back(entry);
    }
    return out;
}

json gens_json(const MonomialIdeal& ideal) {
    json out = json::array();
    for (const auto& g : display_sorted(ideal.generators())) out.push_back(g.str());
    return out;
}

json monomials_json(const std::vector<Monomial>& mons) {
    json out = json::array();
    for (const auto& u : display_sorted(mons)) out.push_back(u.str());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squeezed balls and spheres, stable operators, and generic initial ideals"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string u_path, facets_path, ideal_path, suite = "all";
    int d = 0, n = 0, m = 0, maxdeg = 0;
    bool check_conj = false, quotient_view = false;

    auto add_common = [&](CLI::App* cmd, bool with_field = true) {
        cmd->add_option("--seed", opts.seed, "PRNG seed (default 1; env SQUEEZE_SEED)")
            ->each([&](const std::string&) { opts.seed_given = true; });
        if (with_field)
            cmd->add_option("--field", opts.field, "scalar field: q (rationals) or p (prime)");
        cmd->add_option("--out", opts.out, "write the JSON report to a file");
    };

    auto* cmd_build = app.add_subcommand("build", "build B_d(U) and S_d(U) from a U file");
    cmd_build->add_option("--U", u_path, "U file")->required();
    cmd_build->add_option("--d", d, "ball dimension")->required();
    add_common(cmd_build, false);

    auto* cmd_boundary = app.add_subcommand("boundary", "boundary of a pure complex");
    cmd_boundary->add_option("--facets", facets_path, "facet file")->required();
    add_common(cmd_boundary, false);

    auto* cmd_betti = app.add_subcommand("betti", "Betti table of R/I_{S_d(U)} from a U file");
    cmd_betti->add_option("--U", u_path, "U file")->required();
    cmd_betti->add_option("--d", d, "sphere parameter d")->required();
    cmd_betti->add_flag("--quotient", quotient_view, "index by the quotient resolution");
    add_common(cmd_betti, false);

    auto* cmd_gin = app.add_subcommand("gin", "truncated generic initial ideal");
    cmd_gin->add_option("--ideal", ideal_path, "ideal file")->required();
    cmd_gin->add_option("--n", n, "ambient variable count")->required();
    cmd_gin->add_option("--maxdeg", maxdeg, "degree bound D")->required();
    add_common(cmd_gin);

    auto* cmd_usets = app.add_subcommand("usets", "L and U sets of a complex");
    cmd_usets->add_option("--facets", facets_path, "facet file")->required();
    cmd_usets->add_option("--d", d, "d (dim + 1)")->required();
    add_common(cmd_usets);

    auto* cmd_sq = app.add_subcommand("sq", "squeezing Sq(Gamma) of a complex");
    cmd_sq->add_option("--facets", facets_path, "facet file")->required();
    cmd_sq->add_option("--d", d, "d (dim + 1)")->required();
    add_common(cmd_sq);

    auto* cmd_eshift = app.add_subcommand("eshift", "exterior algebraic shifted complex");
    cmd_eshift->add_option("--facets", facets_path, "facet file")->required();
    add_common(cmd_eshift);

    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate shifted order ideals");
    cmd_enum->add_option("--m", m, "variable count")->required();
    cmd_enum->add_option("--maxdeg", maxdeg, "degree bound")->required();
    cmd_enum->add_flag("--check-conj", check_conj, "verify U(S_d(U)) = U for each U");
    cmd_enum->add_option("--d", d, "d used with --check-conj");
    add_common(cmd_enum);

    auto* cmd_chara5 = app.add_subcommand("chara5", "polytopality conditions for a gin");
    cmd_chara5->add_option("--ideal", ideal_path, "ideal file")->required();
    cmd_chara5->add_option("--n", n, "ambient variable count")->required();
    cmd_chara5->add_option("--d", d, "polytope dimension")->required();
    add_common(cmd_chara5, false);

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite, "all | paper-examples | gin | sweep | operators | exterior");
    add_common(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        std::uint64_t seed = effective_seed(opts);
        Field field = parse_field(opts.field);

        if (cmd_build->parsed()) {
            ShiftedOrderIdeal U = read_order_ideal_file(u_path);
            SqueezedPair pair = build_squeezed(U, d);
            json report = meta(opts, {u_path});
            report["n"] = pair.n;
            report["d"] = pair.d;
            report["ball"] = complex_json(pair.ball);
            report["sphere"] = complex_json(pair.sphere);
            emit(report, opts);
        } else if (cmd_boundary->parsed()) {
            SimplicialComplex complex = read_facets_file(facets_path);
            SimplicialComplex bd = boundary_of_pure(complex);
            json report = meta(opts, {facets_path});
            report["n"] = bd.vertex_count();
            report["facets"] = facets_json(bd);
            emit(report, opts);
        } else if (cmd_betti->parsed()) {
            ShiftedOrderIdeal U = read_order_ideal_file(u_path);
            BettiTable table = squeezed_sphere_betti(U, d);
            json report = meta(opts, {u_path});
            report["d"] = d;
            report["indexing"] = quotient_view ? "quotient" : "ideal";
            report["betti"] = betti_json(quotient_view ? table.quotient_view() : table);
            emit(report, opts);
        } else if (cmd_gin->parsed()) {
            MonomialIdeal ideal = read_ideal_file(ideal_path);
            GinResult gin = gin_truncated(ideal, n, maxdeg, seed, field);
            json report = meta(opts, {ideal_path}, true);
            report["n"] = gin.n;
            report["D"] = gin.D;
            report["gin"] = gens_json(gin.ideal);
            report["dims"] = gin.ideal_dims;
            report["seeds"] = gin.seeds;
            report["agrees"] = gin.seeds_agreeing >= 2;
            report["seeds_agreeing"] = gin.seeds_agreeing;
            emit(report, opts);
        } else if (cmd_usets->parsed()) {
            SimplicialComplex complex = read_facets_file(facets_path);
            LSets L = L_set(complex, d, d + 1, seed, field);
            ShiftedOrderIdeal U = U_set(complex, d, seed, field);
            json report = meta(opts, {facets_path}, true);
            report["d"] = d;
            json levels = json::array();
            for (const auto& level : L.by_degree) levels.push_back(monomials_json(level));
            report["L"] = levels;
            report["U"] = monomials_json(U.monomials());
            report["g"] = U.degree_counts();
            emit(report, opts);
        } else if (cmd_sq->parsed()) {
            SimplicialComplex complex = read_facets_file(facets_path);
            SqueezedPair pair = squeeze_complex(complex, d, seed, field);
            ShiftedOrderIdeal U = U_set(complex, d, seed, field);
            json report = meta(opts, {facets_path}, true);
            report["n"] = pair.n;
            report["d"] = pair.d;
            report["U"] = monomials_json(U.monomials());
            report["sphere"] = {{"facets", facets_json(pair.sphere)}};
            report["betti"] = betti_json(squeezed_sphere_betti(U, d));
            emit(report, opts);
        } else if (cmd_eshift->parsed()) {
            SimplicialComplex complex = read_facets_file(facets_path);
            SimplicialComplex shifted = exterior_gin(complex, seed, field);
            json report = meta(opts, {facets_path}, true);
            report["n"] = shifted.vertex_count();
            report["facets"] = facets_json(shifted);
            report["stanley_reisner"] = gens_json(stanley_reisner_ideal(shifted));
            emit(report, opts);
        } else if (cmd_enum->parsed()) {
            if (check_conj && d == 0)
                throw std::invalid_argument("--check-conj requires --d");
            auto ideals = enumerate_shifted_order_ideals(m, maxdeg);
            bool all_ok = true;
            std::ostream* stream = &std::cout;
            std::ofstream file;
            if (!opts.out.empty()) {
                file.open(opts.out);
                if (!file) throw std::invalid_argument("cannot write " + opts.out);
                stream = &file;
            }
            for (const auto& U : ideals) {
                json line;
                line["U"] = monomials_json(U.monomials());
                if (check_conj) {
                    SqueezedPair pair = build_squeezed(U, d);
                    bool ok = U_set(pair.sphere, d, seed, field) == U;
                    line["ok"] = ok;
                    all_ok = all_ok && ok;
                }
                *stream << line.dump() << '\n';
            }
            json summary;
            summary["count"] = ideals.size();
            summary["version"] = kVersion;
            if (check_conj) summary["all_ok"] = all_ok;
            *stream << summary.dump() << '\n';
            if (check_conj && !all_ok) return kExitMathFailure;
        } else if (cmd_chara5->parsed()) {
            MonomialIdeal ideal = read_ideal_file(ideal_path);
            Chara5Report r = chara5_condition_check(ideal, n, d);
            json report = meta(opts, {ideal_path});
            report["n"] = n;
            report["d"] = d;
            report["conditions"] = {{"max_index_matches", r.max_index_matches},
                                    {"top_degree_vanishes", r.top_degree_vanishes},
                                    {"linear_dim_matches", r.linear_dim_matches},
                                    {"lefschetz_maps_iso", r.lefschetz_maps_iso}};
            report["all"] = r.all();
            emit(report, opts);
        } else if (cmd_verify->parsed()) {
            auto results = run_verify_suite(suite, seed);
            bool all_passed = true;
            json checks = json::array();
            for (const auto& r : results) {
                all_passed = all_passed && r.passed;
                std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
                          << r.seconds << "s)";
                if (!r.detail.empty()) std::cerr << " - " << r.detail;
                std::cerr << "\n";
                json entry;
                entry["id"] = r.id;
                entry["name"] = r.name;
                entry["passed"] = r.passed;
                entry["seconds"] = r.seconds;
                entry["detail"] = r.detail;
                checks.push_back(entry);
            }
            json report;
            report["version"] = kVersion;
            report["seed"] = seed;
            report["suite"] = suite;
            report["checks"] = checks;
            report["all_passed"] = all_passed;
            emit(report, opts);
            if (!all_passed) return kExitMathFailure;
        }
        return kExitOk;
    } catch (const gin_disagreement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const verification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
