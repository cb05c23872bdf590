// wallkit: exact enumeration of numerical Bridgeland walls on P^3 for the
// twisted class v = (-R, 0, D, 0) in the (alpha, s)-slice, with closed-form
// chamber bounds, SVG diagrams and golden-fixture verification.
//
// Exit codes: 0 ok, 1 verify mismatch, 2 usage/parse error, 3 budget
// exceeded.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wallkit/wallkit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct WallsArgs {
    long long R = 0;
    long long D = 0;
    std::string beta = "0";
    std::string min_alpha0_sq;
    bool strict_n2 = false;
    unsigned jobs = 1;
    std::string format = "json";
    std::string out;
    std::string cutoff;
    std::string fixture;
    // diagram extras
    int width = 800;
    int height = 600;
    double alpha_max = 0.0;  // 0 = derive from catalog
    double s_max = 0.0;
};

void add_enumeration_flags(CLI::App* cmd, WallsArgs& a) {
    cmd->add_option("--R", a.R, "Rank parameter R >= 0 of v = (-R, 0, D, 0)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--D", a.D, "Degree parameter D >= 1 of v = (-R, 0, D, 0)")->required();
    cmd->add_option("--beta", a.beta, "Twist: exact string \"0\" or \"1/k\" (no floats)");
    cmd->add_option("--min-alpha0-sq", a.min_alpha0_sq,
                    "Keep only walls with alpha0^2 >= this rational (inclusive)");
    cmd->add_flag("--strict-n2", a.strict_n2,
                  "Use the strict upper bound in the second numerical condition");
    cmd->add_option("--jobs", a.jobs, "Worker threads (output is identical for any value)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cutoff", a.cutoff, "Preset cutoff: \"killing\" or \"gieseker\"")
        ->check(CLI::IsMember({"killing", "gieseker"}));
}

std::uint64_t budget_from_env() {
    const char* env = std::getenv("WALLKIT_BUDGET");
    if (!env) return wallkit::EnumerationOptions{}.budget;
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(env, &pos);
        if (pos != std::string(env).size() || v == 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("WALLKIT_BUDGET", "must be a positive integer");
    }
}

wallkit::EnumerationOptions build_options(const WallsArgs& a, const wallkit::TwistParameter& tw) {
    wallkit::EnumerationOptions opts;
    opts.strict_upper_n2 = a.strict_n2;
    opts.workers = a.jobs;
    opts.budget = budget_from_env();
    if (!a.min_alpha0_sq.empty()) opts.min_alpha0_sq = wallkit::Rat::parse(a.min_alpha0_sq);
    if (!a.cutoff.empty()) {
        if (opts.min_alpha0_sq)
            throw CLI::ValidationError("--cutoff", "cannot be combined with --min-alpha0-sq");
        if (a.cutoff == "killing") {
            if (!tw.is_zero())
                throw CLI::ValidationError("--cutoff", "\"killing\" applies to beta = 0 only");
            opts.min_alpha0_sq = wallkit::Rat(1);
        } else {  // gieseker
            opts.min_alpha0_sq = wallkit::lower_cutoff(tw.beta()).alpha0_sq;
            std::cerr << "note: the gieseker cutoff alpha0^2 >= " << opts.min_alpha0_sq->str()
                      << " assumes every Gieseker semistable sheaf of this class has O(1) as a"
                         " subobject; that holds for the catalogued low-degree moduli but is"
                         " not checked here.\n";
        }
    }
    return opts;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

std::string ranks_joined(const std::vector<long long>& ranks, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(ranks[i]);
    }
    return s;
}

std::string catalog_csv(const wallkit::WallCatalog& cat) {
    std::string s = "ranks,c,d,e,alpha0_sq\n";
    for (const auto& c : cat.candidates) {
        s += ranks_joined(c.ranks, ";") + "," + c.c.str() + "," + c.d.str() + "," + c.e.str() +
             "," + c.alpha0_sq.str() + "\n";
    }
    return s;
}

std::string catalog_table(const wallkit::WallCatalog& cat) {
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"ranks", "c", "d", "e", "alpha0^2"});
    for (const auto& c : cat.candidates)
        rows.push_back({"[" + ranks_joined(c.ranks, ", ") + "]", c.c.str(), c.d.str(), c.e.str(),
                        c.alpha0_sq.str()});
    std::array<std::size_t, 5> w{};
    for (const auto& r : rows)
        for (int i = 0; i < 5; ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream out;
    for (const auto& r : rows) {
        for (int i = 0; i < 5; ++i) {
            out << r[i];
            if (i < 4) out << std::string(w[i] - r[i].size() + 2, ' ');
        }
        out << "\n";
    }
    out << cat.candidates.size() << " candidate group(s), " << cat.walls.size()
        << " distinct wall(s)\n";
    return out.str();
}

int run_walls(const WallsArgs& a) {
    const wallkit::TargetClass target(a.R, a.D);
    const wallkit::TwistParameter twist = wallkit::TwistParameter::parse(a.beta);
    const wallkit::EnumerationOptions opts = build_options(a, twist);
    const wallkit::WallCatalog cat = wallkit::enumerate_walls(target, twist, opts);
    std::string text;
    if (a.format == "json")
        text = wallkit::catalog_to_string(cat);
    else if (a.format == "csv")
        text = catalog_csv(cat);
    else
        text = catalog_table(cat);
    write_output(text, a.out);
    return kExitOk;
}

int run_bounds(long long D, const std::string& format, const std::string& out_path) {
    const wallkit::BoundReport rep = wallkit::bound_report(D);
    std::string text;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["D"] = rep.D;
        j["max_wall_sq"] = rep.max_wall_sq.str();
        j["cap_sq"] = rep.cap_sq.str();
        j["rank_zero_threshold_sq"] = rep.rank_zero_threshold_sq.str();
        j["killing_wall_sq"] = rep.killing_wall_sq.str();
        j["gieseker_region_threshold"] = rep.gieseker_region_threshold.str();
        text = j.dump(1) + "\n";
    } else {
        std::ostringstream s;
        s << "D                          " << rep.D << "\n"
          << "max_wall_sq                " << rep.max_wall_sq.str() << "  (beta = 0)\n"
          << "cap_sq                     " << rep.cap_sq.str() << "\n"
          << "rank_zero_threshold_sq     " << rep.rank_zero_threshold_sq.str() << "\n"
          << "killing_wall_sq            " << rep.killing_wall_sq.str() << "  (beta = 0)\n"
          << "gieseker_region_threshold  " << rep.gieseker_region_threshold.str()
          << "  ((s + 1/6) alpha^2 units, beta = 0)\n";
        text = s.str();
    }
    write_output(text, out_path);
    return kExitOk;
}

int run_diagram(const WallsArgs& a) {
    const wallkit::TargetClass target(a.R, a.D);
    const wallkit::TwistParameter twist = wallkit::TwistParameter::parse(a.beta);
    const wallkit::EnumerationOptions opts = build_options(a, twist);
    const wallkit::WallCatalog cat = wallkit::enumerate_walls(target, twist, opts);
    const wallkit::BoundReport rep = wallkit::bound_report(a.D);

    double alpha_top = 2.0;
    if (!cat.walls.empty()) alpha_top = 1.15 * std::sqrt(cat.walls.rbegin()->first.approx());
    wallkit::ViewBox view;
    view.alpha_min = 0.0;
    view.alpha_max = a.alpha_max > 0 ? a.alpha_max : alpha_top;
    view.s_min = 0.0;
    view.s_max = a.s_max > 0 ? a.s_max : 1.5;
    view.width_px = a.width;
    view.height_px = a.height;
    const std::string out_path = a.out.empty() ? "walls.svg" : a.out;
    wallkit::render_svg(cat, rep, view, out_path);
    std::cerr << "wrote " << out_path << " (" << cat.walls.size() << " wall(s))\n";
    return kExitOk;
}

int run_verify(const WallsArgs& a) {
    wallkit::FixtureFile fixture = wallkit::load_fixture(a.fixture);
    const wallkit::TargetClass target(a.R, a.D);
    const wallkit::TwistParameter twist = wallkit::TwistParameter::parse(a.beta);
    const wallkit::EnumerationOptions opts = build_options(a, twist);
    if (target != fixture.catalog.target || !(twist == fixture.catalog.twist))
        std::cerr << "note: fixture was recorded for R=" << fixture.catalog.target.R
                  << " D=" << fixture.catalog.target.D << " beta="
                  << fixture.catalog.twist.beta().str() << "; comparing anyway\n";
    const wallkit::WallCatalog cat = wallkit::enumerate_walls(target, twist, opts);
    const wallkit::CatalogDiff diff = wallkit::diff_catalogs(cat, fixture.catalog);
    if (diff.empty()) {
        std::cout << "verify: OK, " << cat.candidates.size() << " candidate group(s) match "
                  << a.fixture << "\n";
        return kExitOk;
    }
    std::cout << "verify: MISMATCH against " << a.fixture << "\n" << diff.report();
    return kExitVerifyMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wallkit: numerical Bridgeland walls for v = (-R, 0, D, 0) on P^3\n"
        "Exact rational arithmetic throughout; beta is \"0\" or \"1/k\".\n"
        "Env: WALLKIT_BUDGET caps scan work (positive integer)."};
    app.require_subcommand(1);

    WallsArgs walls_args;
    CLI::App* walls = app.add_subcommand("walls", "Enumerate candidate walls for (R, D, beta)");
    add_enumeration_flags(walls, walls_args);
    walls->add_option("--format", walls_args.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    walls->add_option("--out", walls_args.out, "Write to file instead of stdout");

    long long bounds_D = 0;
    std::string bounds_format = "json", bounds_out;
    CLI::App* bounds = app.add_subcommand("bounds", "Closed-form chamber bounds for a degree");
    bounds->add_option("--D", bounds_D, "Degree D >= 1")->required();
    bounds->add_option("--format", bounds_format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    bounds->add_option("--out", bounds_out, "Write to file instead of stdout");

    WallsArgs diagram_args;
    CLI::App* diagram = app.add_subcommand("diagram", "Render the wall diagram as SVG");
    add_enumeration_flags(diagram, diagram_args);
    diagram->add_option("--out", diagram_args.out, "Output SVG path (default walls.svg)");
    diagram->add_option("--width", diagram_args.width, "Pixel width")->check(CLI::PositiveNumber);
    diagram->add_option("--height", diagram_args.height, "Pixel height")->check(CLI::PositiveNumber);
    diagram->add_option("--alpha-max", diagram_args.alpha_max, "Right edge in alpha units");
    diagram->add_option("--s-max", diagram_args.s_max, "Top edge in s units");

    WallsArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Compare a fresh enumeration with a fixture");
    add_enumeration_flags(verify, verify_args);
    verify->add_option("--fixture", verify_args.fixture, "Fixture JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*walls) return run_walls(walls_args);
        if (*bounds) return run_bounds(bounds_D, bounds_format, bounds_out);
        if (*diagram) return run_diagram(diagram_args);
        if (*verify) return run_verify(verify_args);
    } catch (const wallkit::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
