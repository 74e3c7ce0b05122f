#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "fintop/topology.hpp"

namespace fintop {

enum class SpaceProperty : std::uint8_t {
    ExtremallyDisconnected,
    Submaximal,
    Partition,
    Discrete,
    Indiscrete,
    Hyperconnected,
    SemiConnected,
};

inline constexpr std::array<SpaceProperty, 7> kAllSpaceProperties = {
    SpaceProperty::ExtremallyDisconnected, SpaceProperty::Submaximal,     SpaceProperty::Partition,
    SpaceProperty::Discrete,               SpaceProperty::Indiscrete,     SpaceProperty::Hyperconnected,
    SpaceProperty::SemiConnected,
};

std::string_view name(SpaceProperty p) noexcept;

// Each property is decided from its definition. For n <= 1 the space is both
// discrete and indiscrete, and hyperconnectedness and semi-connectedness hold vacuously.

/// Every open set has open closure.
bool is_extremally_disconnected(const Topology& t);
/// Every dense subset is open. Scans all subsets.
bool is_submaximal(const Topology& t);
/// Every open set is closed.
bool is_partition(const Topology& t);
bool is_discrete(const Topology& t);
bool is_indiscrete(const Topology& t);
/// Every nonempty open set is dense.
bool is_hyperconnected(const Topology& t);
/// No split of X into two nonempty disjoint semi-open sets. Scans all subsets.
bool is_semi_connected(const Topology& t);

bool has_property(const Topology& t, SpaceProperty p);

}  // namespace fintop
