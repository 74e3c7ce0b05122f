#include "fintop/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>
#include <thread>

#include "fintop/document.hpp"
#include "json_codec.hpp"

namespace fintop {

SpaceContext::SpaceContext(Topology t) : table_{std::move(t)} {
    const auto n = table_.size();
    semi_closure_.resize(table_.subset_count());
    for_each_subset(n, [&](SubsetMask a) {
        semi_closure_[a.bits()] = table_.semi_closure(a);
        return true;
    });
    for (const auto p : kAllSpaceProperties) properties_[static_cast<std::size_t>(p)] = has_property(topology(), p);
}

bool SpaceContext::all_subsets(const std::function<bool(SubsetMask)>& pred) const {
    return for_each_subset(size(), [&](SubsetMask a) { return pred(a); });
}

MapContext::MapContext(const SpaceContext& dom, const SpaceContext& cod, std::span<const std::size_t> assign)
    : domain{dom},
      codomain{cod},
      assignment{assign},
      continuity{classify_map(dom.table(), cod.topology(), assign)},
      strongly_irresolute_scl{fintop::strongly_irresolute_scl(dom.table(), cod.size(), assign)} {}

std::string_view name(PropositionKind k) noexcept {
    switch (k) {
        case PropositionKind::EquivalencePerSpace: return "equivalence-per-space";
        case PropositionKind::EquivalencePerSet: return "equivalence-per-set";
        case PropositionKind::ImplicationPerSet: return "implication-per-set";
        case PropositionKind::ImplicationPerMap: return "implication-per-map";
        case PropositionKind::EquivalencePerMap: return "equivalence-per-map";
        case PropositionKind::ExistenceOfWitness: return "existence-of-witness";
    }
    return "?";
}

std::string_view name(Polarity p) noexcept {
    return p == Polarity::CounterexampleToUniversal ? "counterexample-to-universal" : "example-for-existential";
}

std::string_view name(Verdict v) noexcept {
    switch (v) {
        case Verdict::HoldsExhaustively: return "holds-exhaustively";
        case Verdict::WitnessFound: return "witness-found";
        case Verdict::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

bool SweepReport::confirmed() const noexcept {
    if (exploratory) return verdict != Verdict::BudgetExhausted;
    return verdict == (kind == PropositionKind::ExistenceOfWitness ? Verdict::WitnessFound : Verdict::HoldsExhaustively);
}

namespace {

using SC = SetClass;
using CC = ContinuityClass;
using SP = SpaceProperty;

Proposition set_prop(std::string id, PropositionKind kind, std::string statement,
                     std::function<bool(const SpaceContext&, SubsetMask)> pred) {
    Proposition p{.id = std::move(id), .kind = kind, .scope = Scope::Set, .statement = std::move(statement)};
    p.on_set = std::move(pred);
    return p;
}

Proposition space_prop(std::string id, std::string statement, std::function<bool(const SpaceContext&)> pred) {
    Proposition p{.id = std::move(id),
                  .kind = PropositionKind::EquivalencePerSpace,
                  .scope = Scope::Space,
                  .statement = std::move(statement)};
    p.on_space = std::move(pred);
    return p;
}

Proposition map_prop(std::string id, PropositionKind kind, std::string statement,
                     std::function<bool(const MapContext&)> pred) {
    Proposition p{.id = std::move(id), .kind = kind, .scope = Scope::Map, .statement = std::move(statement)};
    p.on_map = std::move(pred);
    return p;
}

Proposition set_implication(std::string id, SC from, SC to) {
    return set_prop(std::move(id), PropositionKind::ImplicationPerSet,
                    std::string(name(from)) + " => " + std::string(name(to)),
                    [from, to](const SpaceContext& c, SubsetMask a) { return !c.has(a, from) || c.has(a, to); });
}

Proposition set_example(std::string id, SC in, SC out) {
    return set_prop(std::move(id), PropositionKind::ExistenceOfWitness,
                    "some set is " + std::string(name(in)) + " but not " + std::string(name(out)),
                    [in, out](const SpaceContext& c, SubsetMask a) { return c.has(a, in) && !c.has(a, out); });
}

Proposition map_implication(std::string id, CC from, CC to) {
    return map_prop(std::move(id), PropositionKind::ImplicationPerMap,
                    std::string(name(from)) + " => " + std::string(name(to)),
                    [from, to](const MapContext& m) { return !m.is(from) || m.is(to); });
}

Proposition map_example(std::string id, CC in, CC out) {
    return map_prop(std::move(id), PropositionKind::ExistenceOfWitness,
                    "some map is " + std::string(name(in)) + " but not " + std::string(name(out)),
                    [in, out](const MapContext& m) { return m.is(in) && !m.is(out); });
}

/// Every subset satisfies `pred`.
template <typename Pred>
bool every(const SpaceContext& c, Pred&& pred) {
    return c.all_subsets([&](SubsetMask a) { return static_cast<bool>(pred(a)); });
}

std::vector<Proposition> build_registry() {
    std::vector<Proposition> r;
    constexpr auto EqSet = PropositionKind::EquivalencePerSet;
    constexpr auto ImpSet = PropositionKind::ImplicationPerSet;

    // Inclusions between set classes.
    r.push_back(set_implication("chain-a-ab", SC::ASet, SC::ABSet));
    r.push_back(set_implication("chain-ab-b", SC::ABSet, SC::BSet));
    r.push_back(set_implication("chain-ab-semiopen", SC::ABSet, SC::SemiOpen));
    r.push_back(set_implication("chain-a-lc", SC::ASet, SC::LocallyClosed));
    r.push_back(set_implication("chain-lc-b", SC::LocallyClosed, SC::BSet));
    r.push_back(set_prop("chain-open-semiopen-beta", ImpSet, "Open => SemiOpen => BetaOpen",
                         [](const SpaceContext& c, SubsetMask a) {
                             return (!c.has(a, SC::Open) || c.has(a, SC::SemiOpen)) &&
                                    (!c.has(a, SC::SemiOpen) || c.has(a, SC::BetaOpen));
                         }));
    r.push_back(set_prop("chain-open-preopen-beta", ImpSet, "Open => Preopen => BetaOpen",
                         [](const SpaceContext& c, SubsetMask a) {
                             return (!c.has(a, SC::Open) || c.has(a, SC::Preopen)) &&
                                    (!c.has(a, SC::Preopen) || c.has(a, SC::BetaOpen));
                         }));

    // Independent routes to the same class.
    r.push_back(set_prop("eq-semiclosed-tset", EqSet, "SemiClosed <=> TSet",
                         [](const SpaceContext& c, SubsetMask a) { return c.has(a, SC::SemiClosed) == c.has(a, SC::TSet); }));
    r.push_back(set_prop("eq-semiregular-dmn", EqSet,
                         "SemiRegular <=> some regular open U has U subset A subset cl U",
                         [](const SpaceContext& c, SubsetMask a) {
                             return c.has(a, SC::SemiRegular) == is_semi_regular_dmn(c.topology(), a);
                         }));
    r.push_back(set_prop("eq-bset-yalvac", EqSet, "BSet <=> A = U cap sCl(A) for some open U",
                         [](const SpaceContext& c, SubsetMask a) {
                             return c.has(a, SC::BSet) == is_b_set_yalvac(c.topology(), a);
                         }));
    r.push_back(set_prop("eq-scl-closed-form", EqSet, "sCl(A) = A cup int(cl(A))",
                         [](const SpaceContext& c, SubsetMask a) {
                             return c.semi_closure(a) == semi_closure_closed_form(c.topology(), a);
                         }));
    r.push_back(set_prop("eq-icset-subspace", EqSet, "IcSet <=> int(A) is closed in the subspace A",
                         [](const SpaceContext& c, SubsetMask a) {
                             return c.has(a, SC::IcSet) == is_ic_set_subspace(c.topology(), a);
                         }));

    r.push_back(set_prop("l00", ImpSet, "BetaOpen(A) => SemiRegular(sCl(A))", [](const SpaceContext& c, SubsetMask a) {
        return !c.has(a, SC::BetaOpen) || c.has(c.semi_closure(a), SC::SemiRegular);
    }));
    r.push_back(set_prop("t00", EqSet, "ABSet <=> SemiOpen and BSet <=> BetaOpen and BSet",
                         [](const SpaceContext& c, SubsetMask a) {
                             const bool ab = c.has(a, SC::ABSet);
                             const bool b = c.has(a, SC::BSet);
                             return ab == (c.has(a, SC::SemiOpen) && b) && ab == (c.has(a, SC::BetaOpen) && b);
                         }));
    r.push_back(set_prop("t0", EqSet, "SemiRegular <=> SemiClosed and ABSet <=> BetaClosed and ABSet",
                         [](const SpaceContext& c, SubsetMask a) {
                             const bool sr = c.has(a, SC::SemiRegular);
                             const bool ab = c.has(a, SC::ABSet);
                             return sr == (c.has(a, SC::SemiClosed) && ab) && sr == (c.has(a, SC::BetaClosed) && ab);
                         }));
    r.push_back(set_prop("t0a", EqSet, "Open <=> ABSet and (Preopen or IcSet)", [](const SpaceContext& c, SubsetMask a) {
        return c.has(a, SC::Open) == (c.has(a, SC::ABSet) && (c.has(a, SC::Preopen) || c.has(a, SC::IcSet)));
    }));

    // Space characterizations.
    r.push_back(space_prop("cor-submax", "Submaximal => the AB-sets are exactly the beta-open sets",
                           [](const SpaceContext& c) {
                               return !c.has(SP::Submaximal) ||
                                      every(c, [&](SubsetMask a) { return c.has(a, SC::ABSet) == c.has(a, SC::BetaOpen); });
                           }));
    r.push_back(space_prop("t1", "ExtremallyDisconnected <=> AB-sets = opens <=> every AB-set is open",
                           [](const SpaceContext& c) {
                               const bool same = every(c, [&](SubsetMask a) { return c.has(a, SC::ABSet) == c.has(a, SC::Open); });
                               const bool into = every(c, [&](SubsetMask a) { return !c.has(a, SC::ABSet) || c.has(a, SC::Open); });
                               const bool ed = c.has(SP::ExtremallyDisconnected);
                               return ed == same && ed == into;
                           }));
    r.push_back(space_prop("t2", "Submaximal <=> every preopen set is AB <=> every dense set is AB",
                           [](const SpaceContext& c) {
                               const bool pre = every(c, [&](SubsetMask a) { return !c.has(a, SC::Preopen) || c.has(a, SC::ABSet); });
                               const bool dense = every(c, [&](SubsetMask a) { return !c.has(a, SC::Dense) || c.has(a, SC::ABSet); });
                               const bool sm = c.has(SP::Submaximal);
                               return sm == pre && sm == dense;
                           }));
    r.push_back(space_prop("t3", "Partition <=> every AB-set is clopen <=> every AB-set is preclosed",
                           [](const SpaceContext& c) {
                               const bool clopen = every(c, [&](SubsetMask a) { return !c.has(a, SC::ABSet) || c.has(a, SC::Clopen); });
                               const bool pre = every(c, [&](SubsetMask a) { return !c.has(a, SC::ABSet) || c.has(a, SC::Preclosed); });
                               const bool part = c.has(SP::Partition);
                               return part == clopen && part == pre;
                           }));
    r.push_back(space_prop("t4", "Indiscrete <=> the AB-sets are exactly the empty set and X", [](const SpaceContext& c) {
        const bool trivial =
            every(c, [&](SubsetMask a) { return c.has(a, SC::ABSet) == (a.is_empty() || a.is_full()); });
        return c.has(SP::Indiscrete) == trivial;
    }));
    r.push_back(space_prop("t5", "Discrete <=> every subset is AB <=> every singleton is AB", [](const SpaceContext& c) {
        const bool all = every(c, [&](SubsetMask a) { return c.has(a, SC::ABSet); });
        const bool singletons = every(c, [&](SubsetMask a) { return a.count() != 1 || c.has(a, SC::ABSet); });
        const bool d = c.has(SP::Discrete);
        return d == all && d == singletons;
    }));
    r.push_back(space_prop("t6", "Hyperconnected <=> every nonempty AB-set is dense", [](const SpaceContext& c) {
        const bool dense =
            every(c, [&](SubsetMask a) { return a.is_empty() || !c.has(a, SC::ABSet) || c.has(a, SC::Dense); });
        return c.has(SP::Hyperconnected) == dense;
    }));
    r.push_back(space_prop("t7", "SemiConnected <=> X is not a disjoint union of two nonempty AB-sets",
                           [](const SpaceContext& c) {
                               const bool split = !every(c, [&](SubsetMask a) {
                                   const auto b = a.complement();
                                   return a.is_empty() || b.is_empty() || !c.has(a, SC::ABSet) || !c.has(b, SC::ABSet);
                               });
                               return c.has(SP::SemiConnected) == !split;
                           }));

    // Non-reversibility and independence examples.
    r.push_back(set_example("nonrev-ab-a", SC::ABSet, SC::ASet));
    r.push_back(set_example("nonrev-ab-b", SC::BSet, SC::ABSet));
    r.push_back(set_example("nonrev-ab-semiopen", SC::SemiOpen, SC::ABSet));
    r.push_back(set_example("indep-ab-lc", SC::ABSet, SC::LocallyClosed));
    r.push_back(set_example("indep-lc-ab", SC::LocallyClosed, SC::ABSet));

    // Continuity.
    r.push_back(map_implication("s41-i", CC::AContinuous, CC::ABContinuous));
    r.push_back(map_implication("s41-ii", CC::StronglyIrresolute, CC::ABContinuous));
    r.push_back(map_implication("s41-iii", CC::ABContinuous, CC::BContinuous));
    r.push_back(map_implication("s41-iv", CC::ABContinuous, CC::SemiContinuous));
    r.push_back(map_prop("s42", PropositionKind::EquivalencePerMap,
                         "ABContinuous <=> SemiContinuous and BContinuous <=> BetaContinuous and BContinuous",
                         [](const MapContext& m) {
                             const bool ab = m.is(CC::ABContinuous);
                             const bool b = m.is(CC::BContinuous);
                             return ab == (m.is(CC::SemiContinuous) && b) && ab == (m.is(CC::BetaContinuous) && b);
                         }));
    r.push_back(map_prop("s42a", PropositionKind::EquivalencePerMap, "AContinuous <=> BetaContinuous and LCContinuous",
                         [](const MapContext& m) {
                             return m.is(CC::AContinuous) == (m.is(CC::BetaContinuous) && m.is(CC::LCContinuous));
                         }));
    r.push_back(map_prop("s43", PropositionKind::EquivalencePerMap,
                         "Continuous <=> ABContinuous and (PreContinuous or IcContinuous)", [](const MapContext& m) {
                             return m.is(CC::Continuous) ==
                                    (m.is(CC::ABContinuous) && (m.is(CC::PreContinuous) || m.is(CC::IcContinuous)));
                         }));
    r.push_back(map_example("nonrev-s41-i", CC::ABContinuous, CC::AContinuous));
    r.push_back(map_example("nonrev-s41-ii", CC::ABContinuous, CC::StronglyIrresolute));
    r.push_back(map_example("nonrev-s41-iii", CC::BContinuous, CC::ABContinuous));
    r.push_back(map_example("nonrev-s41-iv", CC::SemiContinuous, CC::ABContinuous));

    auto si = map_prop("si-forms", PropositionKind::EquivalencePerMap,
                       "StronglyIrresolute (semi-regular preimages) <=> f(sCl A) subset f(A) for all A",
                       [](const MapContext& m) { return m.is(CC::StronglyIrresolute) == m.strongly_irresolute_scl; });
    si.exploratory = true;
    r.push_back(std::move(si));
    return r;
}

// ---------------------------------------------------------------------------
// Sweeps

struct TaskResult {
    std::uint64_t spaces = 0;
    std::uint64_t sets = 0;
    std::uint64_t maps = 0;
    std::optional<Witness> witness;
    bool over_budget = false;

    bool stops() const noexcept { return witness.has_value() || over_budget; }
};

/// Runs tasks 0..count-1, sequentially or on a pool. Tasks after the first
/// stopping one may be skipped; everything before it always runs to completion.
std::vector<TaskResult> run_tasks(std::size_t count, const SweepConfig& config,
                                  const std::function<TaskResult(std::size_t)>& run) {
    std::vector<TaskResult> results(count);
    if (!config.parallel) {
        for (std::size_t i = 0; i < count; ++i) {
            results[i] = run(i);
            if (results[i].stops()) break;
        }
        return results;
    }
    std::size_t workers = config.workers != 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_stop{std::numeric_limits<std::size_t>::max()};
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    if (i > first_stop.load()) continue;
                    results[i] = run(i);
                    if (results[i].stops()) {
                        auto cur = first_stop.load();
                        while (i < cur && !first_stop.compare_exchange_weak(cur, i)) {
                        }
                    }
                }
            });
        }
    }
    return results;
}

SweepReport empty_report(const Proposition& p, std::size_t n_max) {
    return SweepReport{.proposition_id = p.id,
                       .kind = p.kind,
                       .statement = p.statement,
                       .exploratory = p.exploratory,
                       .n_max = n_max};
}

SweepReport reduce(const Proposition& p, std::size_t n_max, const EnumerationBudget& budget,
                   std::vector<TaskResult> results) {
    SweepReport report = empty_report(p, n_max);
    for (auto& r : results) {
        report.spaces_checked += r.spaces;
        report.sets_checked += r.sets;
        report.maps_checked += r.maps;
        if (r.over_budget || report.spaces_checked > budget.max_spaces || report.maps_checked > budget.max_maps) {
            report.verdict = Verdict::BudgetExhausted;
            return report;
        }
        if (r.witness) {
            report.verdict = Verdict::WitnessFound;
            report.witnesses.push_back(std::move(*r.witness));
            return report;
        }
    }
    report.verdict = Verdict::HoldsExhaustively;
    return report;
}

Polarity polarity_of(const Proposition& p) {
    return p.existential() ? Polarity::ExampleForExistential : Polarity::CounterexampleToUniversal;
}

/// The instance is a witness when the predicate value differs from the universal expectation.
bool is_witness(const Proposition& p, bool value) { return p.existential() ? value : !value; }

void scan_space(const Proposition& p, const Topology& t, TaskResult& acc) {
    const SpaceContext ctx(t);
    ++acc.spaces;
    if (p.scope == Scope::Space) {
        if (is_witness(p, p.on_space(ctx))) acc.witness = Witness{p.id, polarity_of(p), t, {}, {}, {}};
        return;
    }
    for_each_subset(t.size(), [&](SubsetMask a) {
        ++acc.sets;
        if (is_witness(p, p.on_set(ctx, a))) {
            acc.witness = Witness{p.id, polarity_of(p), t, a, {}, {}};
            return false;
        }
        return true;
    });
}

SweepReport sweep_spaces(const Proposition& p, const SweepConfig& config) {
    const auto& budget = config.budget;
    require_scannable(budget.max_n, kDefaultTablePoints);
    struct Task {
        std::size_t n;
        std::optional<SubsetMask> first_row;
    };
    std::vector<Task> tasks;
    for (std::size_t n = 0; n <= budget.max_n; ++n) {
        if (n == 0) {
            tasks.push_back({0, std::nullopt});
            continue;
        }
        for (const auto row : first_row_choices(n)) tasks.push_back({n, row});
    }

    auto results = run_tasks(tasks.size(), config, [&](std::size_t i) {
        TaskResult acc;
        const auto visit = [&](const Topology& t) {
            scan_space(p, t, acc);
            if (acc.spaces > budget.max_spaces) acc.over_budget = true;
            return !acc.stops();
        };
        const auto& task = tasks[i];
        if (task.first_row)
            enumerate_topologies_with_first_row(task.n, *task.first_row, visit);
        else
            enumerate_topologies(task.n, visit, budget);
        return acc;
    });
    return reduce(p, budget.max_n, budget, std::move(results));
}

// Existence claims search domains as large as the set-level bound; their
// witnesses are set-level witnesses pushed through a small codomain.
std::size_t map_domain_n(const Proposition& p, const SweepConfig& config) {
    return p.existential() ? std::max(config.budget.max_n, config.max_map_n) : config.max_map_n;
}

std::size_t report_n(const Proposition& p, const SweepConfig& config) {
    return p.scope == Scope::Map ? map_domain_n(p, config) : config.budget.max_n;
}

SweepReport sweep_maps(const Proposition& p, const SweepConfig& config) {
    const auto domain_n = map_domain_n(p, config);
    require_scannable(domain_n, kDefaultTablePoints);
    EnumerationBudget space_budget = config.budget;
    space_budget.max_n = std::max(domain_n, config.max_map_n);
    const auto spaces = all_topologies_up_to(space_budget.max_n, space_budget);
    std::vector<std::unique_ptr<SpaceContext>> contexts;
    for (const auto& t : spaces) contexts.push_back(std::make_unique<SpaceContext>(t));
    const auto bounded = [&](std::size_t n) {
        return static_cast<std::size_t>(std::count_if(spaces.begin(), spaces.end(),
                                                       [&](const Topology& t) { return t.size() <= n; }));
    };
    const auto domains = bounded(domain_n);
    const auto codomains = bounded(config.max_map_n);

    auto results = run_tasks(domains, config, [&](std::size_t d) {
        TaskResult acc;
        const auto& dom = *contexts[d];
        for (std::size_t c = 0; c < codomains && !acc.stops(); ++c) {
            const auto& cod = *contexts[c];
            ++acc.spaces;
            if (map_count(dom.size(), cod.size()) == 0) continue;
            std::vector<std::size_t> assignment(dom.size(), 0);
            do {
                ++acc.maps;
                if (acc.maps > config.budget.max_maps) {
                    acc.over_budget = true;
                    break;
                }
                if (is_witness(p, p.on_map(MapContext(dom, cod, assignment)))) {
                    acc.witness = Witness{p.id, polarity_of(p), spaces[d], {}, spaces[c], assignment};
                    break;
                }
            } while (next_assignment(assignment, cod.size()));
        }
        return acc;
    });
    auto report = reduce(p, domain_n, config.budget, std::move(results));
    report.codomain_n_max = config.max_map_n;
    return report;
}

// ---------------------------------------------------------------------------
// Serialization

using detail::Json;

Json witness_json(const Witness& w) {
    const NamedSpace space(w.space, default_point_names(w.space.size()));
    Json j{{"proposition", w.proposition_id},
           {"polarity", std::string(name(w.polarity))},
           {"space", detail::space_to_json(encode(w.space))}};
    if (w.subset) j["subset"] = space.names(*w.subset);
    if (w.codomain) {
        const auto cod_names = default_point_names(w.codomain->size());
        Json assignment = Json::object();
        for (std::size_t x = 0; x < w.assignment.size(); ++x) assignment[space.points()[x]] = cod_names.at(w.assignment[x]);
        j["map"] = Json{{"codomain", detail::space_to_json(encode(*w.codomain))}, {"assignment", std::move(assignment)}};
    }
    return j;
}

Witness witness_from(const Json& j) {
    try {
        Witness w{j.at("proposition").get<std::string>(), Polarity::CounterexampleToUniversal,
                  decode(detail::space_from_json(j.at("space"))).topology(), {}, {}, {}};
        const auto pol = j.at("polarity").get<std::string>();
        if (pol == name(Polarity::ExampleForExistential))
            w.polarity = Polarity::ExampleForExistential;
        else if (pol != name(Polarity::CounterexampleToUniversal))
            throw DocumentError("unknown polarity \"" + pol + "\"");
        const NamedSpace space(w.space, detail::space_from_json(j.at("space")).points);
        if (j.contains("subset")) w.subset = space.subset(j.at("subset").get<std::vector<std::string>>());
        if (j.contains("map")) {
            const auto& m = j.at("map");
            const auto cod = decode(detail::space_from_json(m.at("codomain")));
            w.codomain = cod.topology();
            w.assignment.assign(w.space.size(), 0);
            std::vector<bool> seen(w.space.size(), false);
            for (const auto& [from, to] : m.at("assignment").items()) {
                const auto x = space.index_of(from);
                seen[x] = true;
                w.assignment[x] = cod.index_of(to.get<std::string>());
            }
            if (std::find(seen.begin(), seen.end(), false) != seen.end())
                throw DocumentError("witness map is not total");
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(std::string("malformed witness: ") + e.what());
    }
}

}  // namespace

const std::vector<Proposition>& registry() {
    static const std::vector<Proposition> kRegistry = build_registry();
    return kRegistry;
}

Proposition implication_proposition(SetClass from, SetClass to) {
    auto p = set_implication("implication:" + std::string(name(from)) + "=>" + std::string(name(to)), from, to);
    return p;
}

std::optional<Proposition> resolve_proposition(std::string_view id) {
    for (const auto& p : registry())
        if (p.id == id) return p;
    constexpr std::string_view kPrefix = "implication:";
    if (id.starts_with(kPrefix)) {
        const auto rest = id.substr(kPrefix.size());
        const auto arrow = rest.find("=>");
        if (arrow == std::string_view::npos) return std::nullopt;
        const auto from = parse_set_class(rest.substr(0, arrow));
        const auto to = parse_set_class(rest.substr(arrow + 2));
        if (from && to) return implication_proposition(*from, *to);
    }
    return std::nullopt;
}

SweepReport verify(const Proposition& p, const SweepConfig& config) {
    config.budget.validate();
    try {
        return p.scope == Scope::Map ? sweep_maps(p, config) : sweep_spaces(p, config);
    } catch (const BudgetExceeded&) {
        // reported below
    } catch (const GroundSetTooLarge&) {
        // reported below
    }
    auto report = empty_report(p, report_n(p, config));
    if (p.scope == Scope::Map) report.codomain_n_max = config.max_map_n;
    report.verdict = Verdict::BudgetExhausted;
    return report;
}

std::optional<Witness> find_counterexample(SetClass from, SetClass to, const EnumerationBudget& budget) {
    SweepConfig config;
    config.budget = budget;
    auto report = verify(implication_proposition(from, to), config);
    if (report.verdict != Verdict::WitnessFound) return std::nullopt;
    return std::move(report.witnesses.front());
}

bool replay(const Witness& w) {
    const auto p = resolve_proposition(w.proposition_id);
    if (!p || polarity_of(*p) != w.polarity) return false;
    const SpaceContext ctx(w.space);
    bool value = false;
    switch (p->scope) {
        case Scope::Space: value = p->on_space(ctx); break;
        case Scope::Set:
            if (!w.subset) return false;
            value = p->on_set(ctx, *w.subset);
            break;
        case Scope::Map: {
            if (!w.codomain || w.assignment.size() != w.space.size()) return false;
            for (const auto y : w.assignment)
                if (y >= w.codomain->size()) return false;
            const SpaceContext cod(*w.codomain);
            value = p->on_map(MapContext(ctx, cod, w.assignment));
            break;
        }
    }
    return is_witness(*p, value);
}

std::string witness_to_json(const Witness& w) { return witness_json(w).dump(); }

Witness witness_from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(std::string("parse error: ") + e.what());
    }
    return witness_from(j);
}

std::string reports_to_json(const std::vector<SweepReport>& reports, const SweepConfig& config) {
    Json list = Json::array();
    for (const auto& r : reports) {
        Json witnesses = Json::array();
        for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
        list.push_back(Json{{"proposition", r.proposition_id},
                            {"kind", std::string(name(r.kind))},
                            {"statement", r.statement},
                            {"exploratory", r.exploratory},
                            {"n_range", Json::array({0, r.n_max})},
                            {"codomain_n_range", r.codomain_n_max ? Json::array({0, *r.codomain_n_max}) : Json()},
                            {"spaces_checked", r.spaces_checked},
                            {"sets_checked", r.sets_checked},
                            {"maps_checked", r.maps_checked},
                            {"verdict", std::string(name(r.verdict))},
                            {"confirmed", r.confirmed()},
                            {"witnesses", std::move(witnesses)}});
    }
    const Json doc{{"format", "fintop-sweep-report/1"},
                   {"budget",
                    Json{{"max_n", config.budget.max_n},
                         {"max_map_n", config.max_map_n},
                         {"max_spaces", config.budget.max_spaces},
                         {"max_maps", config.budget.max_maps}}},
                   {"reports", std::move(list)}};
    return doc.dump(2) + "\n";
}

}  // namespace fintop
