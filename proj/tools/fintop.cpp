// fintop: classify sets, spaces and maps of finite topological spaces, and run
// exhaustive verification sweeps.
//
// Exit status: 0 on success (or every requested proposition confirmed),
// 1 when a proposition fails, 2 on usage, parse or validation errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fintop/document.hpp"
#include "fintop/enumerate.hpp"
#include "fintop/maps.hpp"
#include "fintop/set_classes.hpp"
#include "fintop/space_properties.hpp"
#include "fintop/theorems.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string decomposition_text(const fintop::NamedSpace& s, const std::optional<fintop::Decomposition>& d) {
    if (!d) return {};
    return "U=" + s.format(d->open) + " V=" + s.format(d->other);
}

int classify_set(const std::string& file, const std::vector<std::string>& names) {
    const auto space = fintop::decode(fintop::read_space_document(file));
    const auto& t = space.topology();
    const auto a = space.subset(names);
    std::cout << "subset " << space.format(a) << "\n";
    for (const auto c : fintop::kAllSetClasses) {
        const bool in = fintop::belongs(t, a, c);
        std::string note;
        switch (c) {
            case fintop::SetClass::LocallyClosed: note = decomposition_text(space, fintop::locally_closed_witness(t, a)); break;
            case fintop::SetClass::ASet: note = decomposition_text(space, fintop::a_set_witness(t, a)); break;
            case fintop::SetClass::BSet: note = decomposition_text(space, fintop::b_set_witness(t, a)); break;
            case fintop::SetClass::ABSet: note = decomposition_text(space, fintop::ab_set_witness(t, a)); break;
            case fintop::SetClass::SemiRegular:
                if (const auto u = fintop::semi_regular_dmn_witness(t, a)) note = "regular open U=" + space.format(*u);
                break;
            default: break;
        }
        std::cout << std::left << std::setw(15) << fintop::name(c) << yes_no(in);
        if (!note.empty()) std::cout << "  " << note;
        std::cout << "\n";
    }
    std::cout << std::left << std::setw(15) << "sCl" << space.format(fintop::semi_closure(t, a)) << "\n";
    return kOk;
}

int classify_space(const std::string& file) {
    const auto space = fintop::decode(fintop::read_space_document(file));
    for (const auto p : fintop::kAllSpaceProperties)
        std::cout << std::left << std::setw(24) << fintop::name(p) << yes_no(fintop::has_property(space.topology(), p))
                  << "\n";
    return kOk;
}

int classify_map(const std::string& file) {
    const auto named = fintop::decode(fintop::read_map_document(file));
    for (const auto c : fintop::kAllContinuityClasses)
        std::cout << std::left << std::setw(20) << fintop::name(c) << yes_no(fintop::is_continuous_as(named.map, c))
                  << "\n";
    return kOk;
}

int verify(const std::string& which, const fintop::SweepConfig& config, const std::string& report_path) {
    std::vector<fintop::Proposition> selected;
    if (which == "all") {
        selected = fintop::registry();
    } else if (auto p = fintop::resolve_proposition(which)) {
        selected.push_back(std::move(*p));
    } else {
        std::cerr << "unknown proposition \"" << which << "\"\n";
        return kUsage;
    }

    std::vector<fintop::SweepReport> reports;
    std::size_t confirmed = 0;
    std::size_t required = 0;
    for (const auto& p : selected) {
        auto r = fintop::verify(p, config);
        std::cout << std::left << std::setw(26) << r.proposition_id << std::setw(20) << fintop::name(r.verdict)
                  << "spaces=" << r.spaces_checked << " sets=" << r.sets_checked << " maps=" << r.maps_checked
                  << (r.exploratory ? "  (exploratory)" : "") << (r.confirmed() ? "" : "  FAILED") << "\n";
        if (!r.exploratory) {
            ++required;
            if (r.confirmed()) ++confirmed;
        }
        reports.push_back(std::move(r));
    }
    std::cout << confirmed << "/" << required << " propositions confirmed\n";

    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << report_path << "\n";
            return kUsage;
        }
        out << fintop::reports_to_json(reports, config);
    }
    return confirmed == required ? kOk : kFailed;
}

int enumerate(std::size_t n, bool count_only, const fintop::EnumerationBudget& budget) {
    if (count_only) {
        std::cout << fintop::count_topologies(n, budget) << "\n";
        return kOk;
    }
    fintop::enumerate_topologies(
        n,
        [](const fintop::Topology& t) {
            std::cout << fintop::to_json(fintop::encode(t)) << "\n";
            return true;
        },
        budget);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for finite topological spaces"};
    app.require_subcommand(1);

    std::string space_file;
    std::vector<std::string> subset_names;
    auto* set_cmd = app.add_subcommand("classify-set", "Decide every set class for one subset");
    set_cmd->add_option("space", space_file, "Space document (JSON)")->required();
    set_cmd->add_option("points", subset_names, "Point names of the subset (none for the empty set)");

    auto* space_cmd = app.add_subcommand("classify-space", "Decide the space properties");
    space_cmd->add_option("space", space_file, "Space document (JSON)")->required();

    std::string map_file;
    auto* map_cmd = app.add_subcommand("classify-map", "Decide every continuity class of a map");
    map_cmd->add_option("map", map_file, "Map document (JSON)")->required();

    std::string which;
    fintop::SweepConfig config;
    std::size_t max_n = config.budget.max_n;
    std::optional<std::size_t> max_map_n;
    std::string report_path;
    auto* verify_cmd = app.add_subcommand("verify", "Run exhaustive sweeps for one proposition or \"all\"");
    verify_cmd->add_option("proposition", which, "Proposition id or \"all\"")->required();
    verify_cmd->add_option("--max-n", max_n, "Largest ground set for space and set sweeps")->capture_default_str();
    verify_cmd->add_option("--max-map-n", max_map_n, "Largest ground set per side for map sweeps (default min(3, max-n))");
    verify_cmd->add_flag("--parallel", config.parallel, "Fan sweeps out over worker threads");
    verify_cmd->add_option("--workers", config.workers, "Worker count for --parallel (0 = hardware)");
    verify_cmd->add_option("--max-spaces", config.budget.max_spaces, "Cap on spaces per sweep")->capture_default_str();
    verify_cmd->add_option("--max-maps", config.budget.max_maps, "Cap on maps per sweep")->capture_default_str();
    verify_cmd->add_option("--report", report_path, "Write the JSON report here");

    auto* list_cmd = app.add_subcommand("list", "List proposition ids");

    std::size_t n = 0;
    bool count_only = false;
    fintop::EnumerationBudget enum_budget;
    auto* enum_cmd = app.add_subcommand("enumerate", "List every topology on n points");
    enum_cmd->add_option("--n", n, "Number of points")->required();
    enum_cmd->add_flag("--count-only", count_only, "Print only the count");
    enum_cmd->add_option("--max-n", enum_budget.max_n, "Refuse larger ground sets")->capture_default_str();
    enum_cmd->add_option("--max-spaces", enum_budget.max_spaces, "Cap on topologies produced")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*set_cmd) return classify_set(space_file, subset_names);
        if (*space_cmd) return classify_space(space_file);
        if (*map_cmd) return classify_map(map_file);
        if (*verify_cmd) {
            config.budget.max_n = max_n;
            config.max_map_n = max_map_n.value_or(std::min<std::size_t>(3, max_n));
            return verify(which, config, report_path);
        }
        if (*list_cmd) {
            for (const auto& p : fintop::registry())
                std::cout << std::left << std::setw(26) << p.id << std::setw(24) << fintop::name(p.kind) << p.statement
                          << "\n";
            return kOk;
        }
        if (*enum_cmd) return enumerate(n, count_only, enum_budget);
    } catch (const fintop::TopologyError& e) {
        std::cerr << "invalid topology: " << e.what() << "\n";
        return kUsage;
    } catch (const fintop::DocumentError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const fintop::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
