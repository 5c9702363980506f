// tri4: build, validate and tricolour closed triangulated 4-manifolds,
// extract trisections through the 2-4 move pipeline, compute homology and
// genus bounds, and construct the Davis manifold from the 120-cell.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tri4/bounds.hpp"
#include "tri4/colouring.hpp"
#include "tri4/davis.hpp"
#include "tri4/errors.hpp"
#include "tri4/face_classes.hpp"
#include "tri4/homology.hpp"
#include "tri4/io.hpp"
#include "tri4/moves.hpp"
#include "tri4/presentation.hpp"
#include "tri4/trisection.hpp"

namespace {

using nlohmann::json;
using namespace tri4;

constexpr int kExitOk = 0;
constexpr int kExitUser = 1;
constexpr int kExitInternal = 2;

struct Output {
    bool machine = false;
    json doc = json::object();
    std::ostringstream human;

    void emit() const {
        if (machine)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << human.str();
    }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void progress(const std::string& message) { std::cerr << message << "\n"; }

// ---------------------------------------------------------------- invariants

void describe_complex(Output& out, const Triangulation& tri) {
    const ValidationReport report = validate(tri);
    if (!report.valid)
        throw UserError("invalid triangulation: " +
                        report.violations.front().message);
    const DualGraph dg = dual_graph(tri);
    out.doc["pentachora"] = tri.size();
    out.doc["closed"] = report.closed;
    out.doc["dual"] = {{"nodes", dg.nodes},
                       {"edges", dg.edges},
                       {"connected", dg.connected}};
    out.human << "pentachora = " << tri.size() << "\n"
              << "closed = " << yes_no(report.closed) << "\n";
    if (!report.closed) {
        out.doc["unglued"] = report.unglued;
        out.human << "unglued = " << report.unglued << "\n";
    } else {
        const FVector fv = f_vector(tri);
        out.doc["f"] = {fv.f[0], fv.f[1], fv.f[2], fv.f[3], fv.f[4]};
        out.doc["chi"] = fv.chi;
        out.human << "f = (" << fv.f[0] << ", " << fv.f[1] << ", " << fv.f[2]
                  << ", " << fv.f[3] << ", " << fv.f[4] << ")\n"
                  << "chi = " << fv.chi << "\n";
        if (dg.connected) {
            const OrientationResult orient = orientability(tri);
            out.doc["orientable"] = orient.orientable;
            out.human << "orientable = " << yes_no(orient.orientable) << "\n";
        }
    }
    out.human << "dual nodes = " << dg.nodes << "\n"
              << "dual edges = " << dg.edges << "\n"
              << "dual connected = " << yes_no(dg.connected) << "\n";
}

// ------------------------------------------------------------------- bounds

void render_bound_report(Output& out, const std::string& key,
                         const BoundReport& report) {
    json lines = json::array();
    for (const BoundLine& line : report.lines) {
        json j = {{"name", line.name},
                  {"kind", line.kind == BoundKind::Lower   ? "lower"
                           : line.kind == BoundKind::Upper ? "upper"
                                                           : "info"},
                  {"applicable", line.applicable},
                  {"citation", line.citation}};
        if (line.applicable) {
            if (line.is_integer)
                j["value"] = line.value;
            else
                j["value"] = line.real_value;
        }
        if (!line.note.empty()) j["note"] = line.note;
        lines.push_back(j);

        out.human << "bound " << j["kind"].get<std::string>() << " " << line.name
                  << " = ";
        if (!line.applicable)
            out.human << "n/a (" << line.note << ")";
        else if (line.is_integer)
            out.human << line.value;
        else
            out.human << line.real_value;
        out.human << " [" << line.citation << "]\n";
    }
    json j = {{"lines", lines}, {"consistent", report.consistent}};
    if (report.aggregate_lower) {
        j["aggregate_lower"] = *report.aggregate_lower;
        out.human << "aggregate lower = " << *report.aggregate_lower << "\n";
    }
    if (report.aggregate_upper) {
        j["aggregate_upper"] = *report.aggregate_upper;
        out.human << "aggregate upper = " << *report.aggregate_upper << "\n";
    }
    if (!report.consistent)
        out.human << "WARNING: aggregate lower exceeds aggregate upper\n";
    out.doc[key] = j;
}

struct InvariantFlags {
    std::optional<std::int64_t> chi, beta1, beta2, rank, sigma, signature;
    std::optional<double> volume, gromov;
    bool not_s4 = false, not_cp2 = false, is_s4 = false, is_cp2 = false;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--chi", chi, "Euler characteristic");
        cmd->add_option("--b1", beta1, "first Betti number");
        cmd->add_option("--b2", beta2, "second Betti number");
        cmd->add_option("--rank", rank, "lower bound on rank of pi_1");
        cmd->add_option("--sigma", sigma,
                        "pentachoron count of a known triangulation");
        cmd->add_option("--volume", volume, "hyperbolic volume");
        cmd->add_option("--signature", signature, "signature of the intersection form");
        cmd->add_option("--gromov", gromov, "Gromov norm");
        cmd->add_flag("--not-s4", not_s4, "assert the manifold is not S^4");
        cmd->add_flag("--not-cp2", not_cp2,
                      "assert the manifold is not CP^2 (either orientation)");
        cmd->add_flag("--is-s4", is_s4, "assert the manifold is S^4");
        cmd->add_flag("--is-cp2", is_cp2, "assert the manifold is CP^2");
    }

    InvariantSet build(std::int64_t chi_default) const {
        InvariantSet inv;
        inv.chi = chi.value_or(chi_default);
        inv.beta1 = beta1;
        inv.beta2 = beta2;
        inv.rank_lb = rank;
        inv.sigma = sigma;
        inv.volume = volume;
        inv.gromov_norm = gromov;
        inv.signature = signature;
        inv.not_s4 = not_s4;
        inv.not_cp2 = not_cp2;
        inv.known_s4 = is_s4;
        inv.known_cp2 = is_cp2;
        inv.check();
        return inv;
    }
};

// ----------------------------------------------------------------- commands

int cmd_validate(const std::string& path, Output& out) {
    const Triangulation tri = read_triangulation_file(path);
    const ValidationReport report = validate(tri);
    out.doc["valid"] = report.valid;
    out.doc["closed"] = report.closed;
    out.doc["unglued"] = report.unglued;
    json violations = json::array();
    out.human << "valid = " << yes_no(report.valid) << "\n"
              << "closed = " << yes_no(report.closed) << "\n"
              << "unglued = " << report.unglued << "\n"
              << "violations = " << report.violations.size() << "\n";
    for (const Violation& v : report.violations) {
        violations.push_back(
            {{"pent", v.pent}, {"facet", v.facet}, {"message", v.message}});
        out.human << "violation = (" << v.pent << "," << v.facet << ") "
                  << v.message << "\n";
    }
    out.doc["violations"] = violations;
    return report.valid ? kExitOk : kExitUser;
}

int cmd_info(const std::string& path, Output& out) {
    const Triangulation tri = read_triangulation_file(path);
    describe_complex(out, tri);
    return kExitOk;
}

Colouring obtain_colouring(const Triangulation& tri, const FaceClasses& classes,
                           const std::string& colours_path, bool auto_search,
                           bool from_types, std::int64_t search_budget) {
    const int sources = int(!colours_path.empty()) + int(auto_search) + int(from_types);
    if (sources != 1)
        throw UserError("exactly one colouring source required: "
                        "--colours FILE, --auto or --types");
    if (!colours_path.empty())
        return read_colouring_file(colours_path, tri, classes);
    if (from_types) return colouring_from_types(tri, classes);
    std::optional<Colouring> found = find_colouring(tri, search_budget);
    if (!found) throw UserError("no tricolouring found (search complete)");
    return *found;
}

int cmd_colour(const std::string& path, const std::string& check_path,
               bool auto_search, bool from_types, std::int64_t search_budget,
               const std::string& out_path, Output& out) {
    const Triangulation tri = read_triangulation_file(path);
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    if (!check_path.empty()) {
        const Colouring colouring = read_colouring_file(check_path, tri, classes);
        const ColouringCheck check = verify_colouring(tri, classes, colouring);
        out.doc["ok"] = check.ok;
        json bad = json::array();
        for (PentId p : check.violating) bad.push_back(p);
        out.doc["violating"] = bad;
        out.human << "colouring = " << (check.ok ? "ok" : "invalid") << "\n";
        for (PentId p : check.violating)
            out.human << "violating pentachoron = " << p << "\n";
        return check.ok ? kExitOk : kExitUser;
    }
    if (!auto_search && !from_types) auto_search = true;
    const Colouring colouring =
        obtain_colouring(tri, classes, "", auto_search, from_types, search_budget);
    const std::string text = write_colouring(tri, classes, colouring);
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UserError("cannot write '" + out_path + "'");
    file << text;
    out.doc["written"] = out_path;
    out.human << "written = " << out_path << "\n";
    return kExitOk;
}

int cmd_homology(const std::string& path, const std::string& pres_path,
                 Output& out) {
    const Triangulation tri = read_triangulation_file(path);
    if (tri.size() >= 10'000) progress("computing presentation and Smith form...");
    const GroupPresentation pres = pi1_presentation(tri);
    if (!pres_path.empty()) {
        std::ofstream file(pres_path, std::ios::binary);
        if (!file) throw UserError("cannot write '" + pres_path + "'");
        file << write_presentation(pres);
    }
    const Homology1 h = homology_of_presentation(pres);
    out.doc["generators"] = h.generators;
    out.doc["relators"] = h.relators;
    out.doc["rank"] = h.rank;
    out.doc["beta1"] = h.beta1;
    json torsion = json::array();
    for (const BigInt& d : h.torsion) torsion.push_back(d.str());
    out.doc["torsion"] = torsion;
    out.human << "generators = " << h.generators << "\n"
              << "relators = " << h.relators << "\n"
              << "rank = " << h.rank << "\n"
              << "beta1 = " << h.beta1 << "\n";
    out.human << "torsion =";
    if (h.torsion.empty()) out.human << " none";
    for (const BigInt& d : h.torsion) out.human << " " << d.str();
    out.human << "\n";

    const FVector fv = f_vector(tri);
    out.doc["chi"] = fv.chi;
    out.human << "chi = " << fv.chi << "\n";
    if (orientability(tri).orientable) {
        const std::int64_t beta2 = betti2_from_duality(fv.chi, h.beta1);
        out.doc["beta2"] = beta2;
        out.human << "beta2 = " << beta2 << "\n";
    } else {
        out.human << "beta2 = n/a (non-orientable)\n";
    }
    return kExitOk;
}

int cmd_trisect(const std::string& path, const std::string& colours_path,
                bool auto_search, bool from_types, std::int64_t search_budget,
                const InvariantFlags& flags, Output& out) {
    const Triangulation tri = read_triangulation_file(path);
    require_closed(tri, "trisect");
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    const Colouring colouring = obtain_colouring(
        tri, classes, colours_path, auto_search, from_types, search_budget);
    {
        const ColouringCheck check = verify_colouring(tri, classes, colouring);
        if (!check.ok)
            throw UserError("colouring violates the 2-2-1 pattern at pentachoron " +
                            std::to_string(check.violating.front()));
    }

    const std::int64_t sigma_evidence = tri.size();
    if (tri.size() >= 10'000) progress("running the 2-4 move pipeline...");
    const PipelineResult piped = run_pipeline(tri, classes, colouring);
    const FaceClasses post_classes = FaceClasses::compute(piped.tri, 0);
    if (tri.size() >= 10'000) progress("extracting the trisection...");
    const TrisectionReport report =
        trisection_report(piped.tri, post_classes, piped.colouring);

    out.doc["pentachora"] = tri.size();
    out.doc["chi"] = piped.f_before.chi;
    out.doc["pairs"] = piped.pairs_processed;
    out.doc["post_pentachora"] = piped.tri.size();
    out.human << "pentachora = " << tri.size() << "\n"
              << "chi = " << piped.f_before.chi << "\n"
              << "pairs = " << piped.pairs_processed << "\n"
              << "post pentachora = " << piped.tri.size() << "\n";

    out.doc["trisection"] = json::parse(report_to_json(report));
    out.human << "genus = (" << report.genus << "; " << report.handle_genus[0]
              << ", " << report.handle_genus[1] << ", " << report.handle_genus[2]
              << ")\n";
    out.human << "surface squares = " << report.surface.squares << "\n"
              << "surface edges = " << report.surface.edges << "\n"
              << "surface vertices = " << report.surface.vertices << "\n"
              << "surface chi = " << report.surface.chi << "\n"
              << "surface connected = " << yes_no(report.surface.connected) << "\n"
              << "surface orientable = " << yes_no(report.surface.orientable)
              << "\n";
    for (int k = 0; k < 3; ++k)
        out.human << "spine " << k << ": vertices = " << report.spines[k].vertices
                  << ", edges = " << report.spines[k].edges
                  << ", betti1 = " << report.spines[k].betti1
                  << ", connected = " << yes_no(report.spines[k].connected)
                  << "\n";
    out.human << "chi check = ok (2 + " << report.genus << " - "
              << report.handle_genus[0] + report.handle_genus[1] +
                     report.handle_genus[2]
              << " = " << report.chi << ")\n";

    if (tri.size() >= 10'000) progress("computing homology...");
    const Homology1 h = homology_h1(tri);
    const std::int64_t beta2 = betti2_from_duality(piped.f_before.chi, h.beta1);
    out.doc["beta1"] = h.beta1;
    out.doc["beta2"] = beta2;
    out.human << "beta1 = " << h.beta1 << "\n"
              << "beta2 = " << beta2 << "\n";

    InvariantSet inv = flags.build(piped.f_before.chi);
    if (inv.chi != piped.f_before.chi)
        throw UserError("--chi disagrees with the computed Euler characteristic");
    if (!inv.beta1) inv.beta1 = h.beta1;
    if (!inv.beta2) inv.beta2 = beta2;
    if (!inv.sigma) inv.sigma = sigma_evidence;
    inv.check();
    const BoundReport lower = lower_bounds(inv);
    render_bound_report(out, "bounds", lower);

    const std::int64_t sigma_upper = upper_bound_sigma(*inv.sigma);
    const std::int64_t lower_value = lower.aggregate_lower.value_or(0);
    const std::int64_t upper_value = std::min(report.genus, sigma_upper);
    out.doc["sigma_upper"] = sigma_upper;
    out.doc["sandwich"] = {{"upper", upper_value}, {"lower", lower_value}};
    out.human << "upper bound from sigma: " << sigma_upper << " = 60 * "
              << *inv.sigma << "\n";
    out.human << "sandwich: " << upper_value << " >= g(M) >= " << lower_value
              << "\n";
    return kExitOk;
}

int cmd_bounds(const InvariantFlags& flags, bool hyperbolic,
               std::optional<std::int64_t> cover_degree,
               const std::vector<std::string>& records, Output& out) {
    if (!flags.chi && !flags.volume)
        throw UserError("bounds: --chi (or --volume with --hyperbolic) required");
    InvariantSet inv = flags.build(0);

    if (flags.chi) {
        render_bound_report(out, "bounds", lower_bounds(inv));
        if (inv.sigma) {
            const std::int64_t upper = upper_bound_sigma(*inv.sigma);
            out.doc["sigma_upper"] = upper;
            out.human << "upper bound from sigma: " << upper << " = 60 * "
                      << *inv.sigma << "\n";
        }
    }
    if (cover_degree) {
        out.human << "cover degree = " << *cover_degree << "\n";
        out.doc["cover_degree"] = *cover_degree;
        render_bound_report(out, "cover_bounds", cover_bounds(inv, *cover_degree));
    }
    if (hyperbolic)
        render_bound_report(out, "hyperbolic_bounds", hyperbolic_bounds(inv));
    if (inv.signature || inv.gromov_norm) {
        const double e =
            einstein_bound(inv.signature.value_or(0), inv.gromov_norm.value_or(0.0));
        out.doc["einstein_lower"] = e;
        out.human << "einstein lower = " << e
                  << " [g >= |sign|/2 + ||M||/(7776 pi^2)]\n";
    }
    if (!records.empty()) {
        std::vector<StableRecord> parsed;
        for (const std::string& r : records) {
            const auto eq = r.find('=');
            if (eq == std::string::npos)
                throw UserError("bad --record '" + r + "', expected d=value");
            try {
                parsed.push_back(StableRecord{std::stoll(r.substr(0, eq)),
                                              std::stoll(r.substr(eq + 1))});
            } catch (const std::exception&) {
                throw UserError("bad --record '" + r + "', expected d=value");
            }
        }
        const StableResult stable = stable_records(
            parsed, flags.chi ? std::optional<InvariantSet>(inv) : std::nullopt);
        out.doc["stable"] = {{"min_num", stable.min_num},
                             {"min_den", stable.min_den},
                             {"min", stable.min_real}};
        out.human << "stable record minimum = " << stable.min_num << "/"
                  << stable.min_den << " = " << stable.min_real
                  << " (upper bound on the stable genus)\n";
        if (stable.stable_lower) {
            out.doc["stable"]["lower"] = *stable.stable_lower;
            out.human << "stable lower = " << *stable.stable_lower
                      << " [60 sigma_inf >= g_inf >= |chi|/3]\n";
        }
    }
    return kExitOk;
}

int cmd_davis(const std::string& out_path, const std::string& colours_path,
              bool emit_bounded, bool list_candidates, std::int64_t coset_budget,
              Output& out) {
    progress("enumerating the [5,3,3] group...");
    const CosetTable table = davis_coset_table(coset_budget);
    progress("building the 120-cell triangulation...");
    const Triangulation bounded = build_120cell(table);

    if (list_candidates) {
        const DavisSearch search = davis_search(table, bounded);
        json cands = json::array();
        for (const DavisCandidate& c : search.candidates) {
            cands.push_back({{"w", c.w_coset},
                             {"word_length", c.w_word.size()},
                             {"passes", c.passes},
                             {"failure", c.failure}});
            out.human << "candidate w=" << c.w_coset << " len=" << c.w_word.size()
                      << " : " << (c.passes ? "pass" : "fail (" + c.failure + ")")
                      << "\n";
        }
        out.doc["candidates"] = cands;
        out.doc["passing"] = search.passing.size();
        out.human << "passing = " << search.passing.size() << "\n";
        if (out_path.empty()) return kExitOk;
    }

    Triangulation result(0);
    const Triangulation* to_emit = nullptr;
    if (emit_bounded) {
        to_emit = &bounded;
    } else {
        progress("searching the opposite-facet identification...");
        DavisManifold manifold = davis_identify(table, bounded);
        if (manifold.search.passing.size() > 1)
            std::cerr << "WARNING: " << manifold.search.passing.size()
                      << " identification candidates pass; emitting the first\n";
        result = std::move(manifold.tri);
        to_emit = &result;
    }

    if (!colours_path.empty()) {
        const FaceClasses classes = FaceClasses::compute(*to_emit, 0);
        const Colouring colouring = emit_bounded
                                        ? colouring_from_types(*to_emit, classes)
                                        : davis_colouring(*to_emit, classes);
        std::ofstream file(colours_path, std::ios::binary);
        if (!file) throw UserError("cannot write '" + colours_path + "'");
        file << write_colouring(*to_emit, classes, colouring);
    }
    if (out_path.empty()) {
        std::cout << write_triangulation(*to_emit);
    } else {
        write_triangulation_file(*to_emit, out_path);
        out.doc["written"] = out_path;
        out.human << "written = " << out_path << "\n"
                  << "pentachora = " << to_emit->size() << "\n";
        out.doc["pentachora"] = to_emit->size();
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangulated 4-manifolds: validation, tricolourings, 2-4 move "
                 "trisections, homology, genus bounds and the Davis manifold"};
    app.require_subcommand(1);
    bool machine = false;
    int threads = 1;
    app.add_flag("--json", machine, "machine-readable JSON on stdout");
    app.add_option("--threads", threads,
                   "worker threads (reserved; all operations run single-threaded "
                   "for reproducibility)")
        ->check(CLI::PositiveNumber);

    std::string path, colours_path, check_path, out_path, pres_path;
    bool auto_search = false, from_types = false;
    std::int64_t search_budget = 50'000'000;
    std::int64_t coset_budget = 1'000'000;
    bool emit_bounded = false, list_candidates = false, hyperbolic = false;
    std::optional<std::int64_t> cover_degree;
    std::vector<std::string> records;
    InvariantFlags trisect_flags, bounds_flags;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a gluing table");
    validate_cmd->add_option("file", path, "triangulation file")->required();

    CLI::App* info_cmd =
        app.add_subcommand("info", "f-vector, chi, orientability, dual graph");
    info_cmd->add_option("file", path, "triangulation file")->required();

    CLI::App* colour_cmd =
        app.add_subcommand("colour", "find, derive or check a tricolouring");
    colour_cmd->add_option("file", path, "triangulation file")->required();
    colour_cmd->add_flag("--auto", auto_search,
                         "search for the least valid colouring (default)");
    colour_cmd->add_flag("--types", from_types, "derive from vertex types");
    colour_cmd->add_option("--check", check_path, "verify a colouring file");
    colour_cmd->add_option("-o,--output", out_path, "write the colouring here");
    colour_cmd->add_option("--search-budget", search_budget,
                           "node budget for the colouring search");

    CLI::App* trisect_cmd = app.add_subcommand(
        "trisect", "pair, move, extract the trisection, homology and bounds");
    trisect_cmd->add_option("file", path, "triangulation file")->required();
    trisect_cmd->add_option("--colours", colours_path, "colouring file");
    trisect_cmd->add_flag("--auto", auto_search, "search for a colouring");
    trisect_cmd->add_flag("--types", from_types, "derive colouring from types");
    trisect_cmd->add_option("--search-budget", search_budget,
                            "node budget for the colouring search");
    trisect_flags.add_options(trisect_cmd);

    CLI::App* homology_cmd =
        app.add_subcommand("homology", "H1 via the dual presentation and Smith "
                                       "normal form");
    homology_cmd->add_option("file", path, "triangulation file")->required();
    homology_cmd->add_option("--presentation-out", pres_path,
                             "write the presentation here");

    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "genus bounds from supplied invariants");
    bounds_flags.add_options(bounds_cmd);
    bounds_cmd->add_flag("--hyperbolic", hyperbolic,
                         "hyperbolic volume bounds (Vol = (4/3) pi^2 chi)");
    bounds_cmd->add_option("--cover-degree", cover_degree,
                           "bounds for a finite cover of this degree");
    bounds_cmd->add_option("--record", records,
                           "stable-genus record 'd=value' (repeatable)");

    CLI::App* davis_cmd = app.add_subcommand(
        "davis", "construct the Davis manifold triangulation from the 120-cell");
    davis_cmd->add_option("-o,--output", out_path, "triangulation output path");
    davis_cmd->add_option("--colours-out", colours_path,
                          "write the type colouring here");
    davis_cmd->add_flag("--emit-bounded", emit_bounded,
                        "emit the pre-identification 120-cell complex");
    davis_cmd->add_flag("--list-candidates", list_candidates,
                        "print every identification pairing tested");
    davis_cmd->add_option("--coset-budget", coset_budget,
                          "coset budget for the enumeration");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.machine = machine;
    try {
        int code = kExitInternal;
        if (*validate_cmd) code = cmd_validate(path, out);
        else if (*info_cmd) code = cmd_info(path, out);
        else if (*colour_cmd)
            code = cmd_colour(path, check_path, auto_search, from_types,
                              search_budget, out_path, out);
        else if (*trisect_cmd)
            code = cmd_trisect(path, colours_path, auto_search, from_types,
                               search_budget, trisect_flags, out);
        else if (*homology_cmd) code = cmd_homology(path, pres_path, out);
        else if (*bounds_cmd)
            code = cmd_bounds(bounds_flags, hyperbolic, cover_degree, records, out);
        else if (*davis_cmd)
            code = cmd_davis(out_path, colours_path, emit_bounded, list_candidates,
                             coset_budget, out);
        out.emit();
        return code;
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
