#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fintop/subset_mask.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// The generalized-open (and closed) set classes decided by this library.
enum class SetClass : std::uint8_t {
    Open,
    Closed,
    Clopen,
    Dense,
    RegularOpen,
    RegularClosed,
    SemiOpen,
    SemiClosed,
    SemiRegular,
    Preopen,
    Preclosed,
    BetaOpen,
    BetaClosed,
    LocallyClosed,
    ASet,
    BSet,
    ABSet,
    IcSet,
    TSet,
};

inline constexpr std::size_t kSetClassCount = 19;

inline constexpr std::array<SetClass, kSetClassCount> kAllSetClasses = {
    SetClass::Open,          SetClass::Closed,        SetClass::Clopen,     SetClass::Dense,
    SetClass::RegularOpen,   SetClass::RegularClosed, SetClass::SemiOpen,   SetClass::SemiClosed,
    SetClass::SemiRegular,   SetClass::Preopen,       SetClass::Preclosed,  SetClass::BetaOpen,
    SetClass::BetaClosed,    SetClass::LocallyClosed, SetClass::ASet,       SetClass::BSet,
    SetClass::ABSet,         SetClass::IcSet,         SetClass::TSet,
};

std::string_view name(SetClass c) noexcept;
std::optional<SetClass> parse_set_class(std::string_view text) noexcept;

/// A set of SetClass flags.
class SetClassSet {
  public:
    constexpr SetClassSet() = default;
    constexpr bool has(SetClass c) const noexcept { return (bits_ >> static_cast<unsigned>(c)) & 1u; }
    constexpr void add(SetClass c) noexcept { bits_ |= std::uint32_t{1} << static_cast<unsigned>(c); }
    constexpr void set(SetClass c, bool on) noexcept {
        if (on) add(c);
    }
    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr bool operator==(const SetClassSet&) const = default;

  private:
    std::uint32_t bits_ = 0;
};

// Definitional predicates. Every function checks that `a` fits `t`.

bool is_open(const Topology& t, SubsetMask a);
bool is_closed(const Topology& t, SubsetMask a);
bool is_clopen(const Topology& t, SubsetMask a);
bool is_dense(const Topology& t, SubsetMask a);
bool is_regular_open(const Topology& t, SubsetMask a);
bool is_regular_closed(const Topology& t, SubsetMask a);
/// a subset of cl(int a)
bool is_semi_open(const Topology& t, SubsetMask a);
/// int(cl a) subset of a
bool is_semi_closed(const Topology& t, SubsetMask a);
/// int a == int(cl a). Coextensive with semi-closed; kept as its own implementation.
bool is_t_set(const Topology& t, SubsetMask a);
bool is_semi_regular(const Topology& t, SubsetMask a);
bool is_preopen(const Topology& t, SubsetMask a);
bool is_preclosed(const Topology& t, SubsetMask a);
bool is_beta_open(const Topology& t, SubsetMask a);
bool is_beta_closed(const Topology& t, SubsetMask a);
/// a ∩ cl(int a) subset of int a
bool is_ic_set(const Topology& t, SubsetMask a);

/// `a == open ∩ other`, the least such pair in numeric order of (open, other).
struct Decomposition {
    SubsetMask open;
    SubsetMask other;
    bool operator==(const Decomposition&) const = default;
};

// Existential scans. Each returns the least decomposition, if any; they
// scan supersets of `a`, so the ground set must be scannable.

std::optional<Decomposition> locally_closed_witness(const Topology& t, SubsetMask a);
std::optional<Decomposition> a_set_witness(const Topology& t, SubsetMask a);
std::optional<Decomposition> b_set_witness(const Topology& t, SubsetMask a);
std::optional<Decomposition> ab_set_witness(const Topology& t, SubsetMask a);

bool is_locally_closed(const Topology& t, SubsetMask a);
bool is_a_set(const Topology& t, SubsetMask a);
bool is_b_set(const Topology& t, SubsetMask a);
bool is_ab_set(const Topology& t, SubsetMask a);

/// Dispatches to the predicate for `c`.
bool belongs(const Topology& t, SubsetMask a, SetClass c);
/// All 19 verdicts for one subset.
SetClassSet classify_set(const Topology& t, SubsetMask a);

/// Intersection of all semi-closed supersets of `a`.
SubsetMask semi_closure(const Topology& t, SubsetMask a);

// Alternative characterizations. These are independent routes to the same
// classes; the theorem engine checks them against the definitions above.

/// a ∪ int(cl a)
SubsetMask semi_closure_closed_form(const Topology& t, SubsetMask a);
/// Least regular open U with U ⊆ a ⊆ cl U.
std::optional<SubsetMask> semi_regular_dmn_witness(const Topology& t, SubsetMask a);
bool is_semi_regular_dmn(const Topology& t, SubsetMask a);
/// Least open U with a == U ∩ sCl(a).
std::optional<SubsetMask> b_set_yalvac_witness(const Topology& t, SubsetMask a);
bool is_b_set_yalvac(const Topology& t, SubsetMask a);
/// int a is closed in the subspace a: some open U has U ∩ a == a \ int a.
bool is_ic_set_subspace(const Topology& t, SubsetMask a);

/// Default ceiling on n for ClassTable.
inline constexpr std::size_t kDefaultTablePoints = 16;

/// Class membership for every subset of one topology, computed in one sweep.
///
/// Interior and closure are memoized per subset. The four existential classes
/// (locally closed, A, B, AB) are filled by marking U ∩ V over all pairs of an
/// open U and a member V of the partner family, which is the definition read
/// in the other direction.
class ClassTable {
  public:
    /// Throws GroundSetTooLarge when n exceeds `max_points`.
    explicit ClassTable(Topology t, std::size_t max_points = kDefaultTablePoints);

    const Topology& topology() const noexcept { return topology_; }
    std::size_t size() const noexcept { return topology_.size(); }
    std::size_t subset_count() const noexcept { return flags_.size(); }

    SetClassSet classes(SubsetMask a) const { return flags_[index(a)]; }
    bool has(SubsetMask a, SetClass c) const { return classes(a).has(c); }
    SubsetMask interior(SubsetMask a) const { return interior_[index(a)]; }
    SubsetMask closure(SubsetMask a) const { return closure_[index(a)]; }
    /// Definitional: intersection of the semi-closed supersets, read from the table.
    SubsetMask semi_closure(SubsetMask a) const;

    /// Members of class `c` in ascending numeric order.
    std::vector<SubsetMask> members(SetClass c) const;
    /// True iff `pred` holds on every subset of the ground set.
    template <typename Pred>
    bool all_subsets(Pred&& pred) const {
        return for_each_subset(size(), [&](SubsetMask a) { return static_cast<bool>(pred(a)); });
    }

  private:
    std::size_t index(SubsetMask a) const {
        topology_.check_fits(a);
        return static_cast<std::size_t>(a.bits());
    }

    Topology topology_;
    std::vector<SubsetMask> interior_;
    std::vector<SubsetMask> closure_;
    std::vector<SetClassSet> flags_;
};

}  // namespace fintop
