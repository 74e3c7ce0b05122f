#include "fintop/space_properties.hpp"

#include "fintop/set_classes.hpp"

namespace fintop {

std::string_view name(SpaceProperty p) noexcept {
    switch (p) {
        case SpaceProperty::ExtremallyDisconnected: return "ExtremallyDisconnected";
        case SpaceProperty::Submaximal: return "Submaximal";
        case SpaceProperty::Partition: return "Partition";
        case SpaceProperty::Discrete: return "Discrete";
        case SpaceProperty::Indiscrete: return "Indiscrete";
        case SpaceProperty::Hyperconnected: return "Hyperconnected";
        case SpaceProperty::SemiConnected: return "SemiConnected";
    }
    return "?";
}

bool is_extremally_disconnected(const Topology& t) {
    for (const auto u : t.opens())
        if (!t.is_open(t.closure(u))) return false;
    return true;
}

bool is_submaximal(const Topology& t) {
    require_scannable(t.size());
    return for_each_subset(t.size(), [&](SubsetMask a) { return !t.closure(a).is_full() || t.is_open(a); });
}

bool is_partition(const Topology& t) {
    for (const auto u : t.opens())
        if (!t.is_open(u.complement())) return false;
    return true;
}

bool is_discrete(const Topology& t) {
    return t.size() < kMaxPoints && t.opens().size() == (std::size_t{1} << t.size());
}

bool is_indiscrete(const Topology& t) { return t.size() == 0 || t.opens().size() == 2; }

bool is_hyperconnected(const Topology& t) {
    for (const auto u : t.opens())
        if (!u.is_empty() && !t.closure(u).is_full()) return false;
    return true;
}

bool is_semi_connected(const Topology& t) {
    require_scannable(t.size());
    return for_each_subset(t.size(), [&](SubsetMask a) {
        const auto b = a.complement();
        return a.is_empty() || b.is_empty() || !is_semi_open(t, a) || !is_semi_open(t, b);
    });
}

bool has_property(const Topology& t, SpaceProperty p) {
    switch (p) {
        case SpaceProperty::ExtremallyDisconnected: return is_extremally_disconnected(t);
        case SpaceProperty::Submaximal: return is_submaximal(t);
        case SpaceProperty::Partition: return is_partition(t);
        case SpaceProperty::Discrete: return is_discrete(t);
        case SpaceProperty::Indiscrete: return is_indiscrete(t);
        case SpaceProperty::Hyperconnected: return is_hyperconnected(t);
        case SpaceProperty::SemiConnected: return is_semi_connected(t);
    }
    return false;
}

}  // namespace fintop
