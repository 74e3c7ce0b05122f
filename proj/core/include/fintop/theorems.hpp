#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/enumerate.hpp"
#include "fintop/maps.hpp"
#include "fintop/set_classes.hpp"
#include "fintop/space_properties.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// Everything a proposition may ask about one space, computed once.
class SpaceContext {
  public:
    explicit SpaceContext(Topology t);

    const Topology& topology() const noexcept { return table_.topology(); }
    const ClassTable& table() const noexcept { return table_; }
    std::size_t size() const noexcept { return table_.size(); }

    bool has(SubsetMask a, SetClass c) const { return table_.has(a, c); }
    bool has(SpaceProperty p) const noexcept { return properties_[static_cast<std::size_t>(p)]; }
    SubsetMask semi_closure(SubsetMask a) const { return semi_closure_.at(a.bits()); }

    /// pred(a) for every subset a.
    bool all_subsets(const std::function<bool(SubsetMask)>& pred) const;

  private:
    ClassTable table_;
    std::vector<SubsetMask> semi_closure_;
    std::array<bool, kAllSpaceProperties.size()> properties_{};
};

/// One map between two prepared spaces.
struct MapContext {
    MapContext(const SpaceContext& domain, const SpaceContext& codomain, std::span<const std::size_t> assignment);

    const SpaceContext& domain;
    const SpaceContext& codomain;
    std::span<const std::size_t> assignment;
    ContinuitySet continuity;
    bool strongly_irresolute_scl;

    bool is(ContinuityClass c) const noexcept { return continuity.has(c); }
};

enum class PropositionKind {
    EquivalencePerSpace,
    EquivalencePerSet,
    ImplicationPerSet,
    ImplicationPerMap,
    EquivalencePerMap,
    ExistenceOfWitness,
};

std::string_view name(PropositionKind k) noexcept;

/// What a proposition quantifies over.
enum class Scope { Space, Set, Map };

/// A checkable claim. Universal kinds hold when the predicate is true on every
/// instance; ExistenceOfWitness holds when it is true on at least one.
struct Proposition {
    std::string id;
    PropositionKind kind;
    Scope scope;
    std::string statement;
    /// Recorded in reports but never affects pass/fail.
    bool exploratory = false;

    std::function<bool(const SpaceContext&)> on_space{};
    std::function<bool(const SpaceContext&, SubsetMask)> on_set{};
    std::function<bool(const MapContext&)> on_map{};

    bool existential() const noexcept { return kind == PropositionKind::ExistenceOfWitness; }
};

/// The fixed list of propositions, one per claim.
const std::vector<Proposition>& registry();

/// Registry lookup, also accepting ids of the form "implication:<From>=><To>" for set classes.
std::optional<Proposition> resolve_proposition(std::string_view id);

/// Universal set-level proposition "every member of `from` is a member of `to`".
Proposition implication_proposition(SetClass from, SetClass to);

enum class Polarity { CounterexampleToUniversal, ExampleForExistential };
std::string_view name(Polarity p) noexcept;

/// A concrete instance on which a proposition was decided.
struct Witness {
    std::string proposition_id;
    Polarity polarity;
    Topology space;
    std::optional<SubsetMask> subset;
    std::optional<Topology> codomain;
    std::vector<std::size_t> assignment;
};

enum class Verdict { HoldsExhaustively, WitnessFound, BudgetExhausted };
std::string_view name(Verdict v) noexcept;

/// Sweep limits. `budget.max_n` bounds space- and set-level sweeps. `max_map_n`
/// bounds both sides of universal map sweeps; existential map sweeps keep the
/// codomain within `max_map_n` but let the domain grow to `budget.max_n`.
struct SweepConfig {
    /// max_spaces caps spaces visited (space pairs for map sweeps).
    EnumerationBudget budget{.max_n = 4, .max_spaces = 1'000'000};
    std::size_t max_map_n = 3;
    bool parallel = false;
    /// 0 picks std::thread::hardware_concurrency().
    std::size_t workers = 0;
};

struct SweepReport {
    std::string proposition_id;
    PropositionKind kind;
    std::string statement;
    bool exploratory = false;
    /// Largest ground set searched (the domain side for map scope).
    std::size_t n_max = 0;
    /// Map scope only.
    std::optional<std::size_t> codomain_n_max{};
    /// Spaces for space/set scope; (domain, codomain) pairs for map scope.
    std::uint64_t spaces_checked = 0;
    std::uint64_t sets_checked = 0;
    std::uint64_t maps_checked = 0;
    Verdict verdict = Verdict::HoldsExhaustively;
    std::vector<Witness> witnesses{};

    /// A universal claim held, or an existential one found its witness.
    bool confirmed() const noexcept;
};

/// Exhaustive evaluation in canonical order (n ascending, enumeration order,
/// subset numeric order, map lexicographic order). Stops at the first witness.
/// Budget overruns are reported as BudgetExhausted, never thrown.
SweepReport verify(const Proposition& p, const SweepConfig& config = {});

/// First subset in `from` but not in `to`, if any, within n <= budget.max_n.
std::optional<Witness> find_counterexample(SetClass from, SetClass to, const EnumerationBudget& budget = {.max_n = 4});

/// Re-evaluates the proposition on the witness; true iff the recorded polarity is reproduced.
bool replay(const Witness& w);

std::string witness_to_json(const Witness& w);
Witness witness_from_json(std::string_view text);

/// One self-describing document for a batch of sweeps.
std::string reports_to_json(const std::vector<SweepReport>& reports, const SweepConfig& config);

}  // namespace fintop
