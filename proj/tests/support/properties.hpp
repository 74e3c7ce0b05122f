#pragma once

// Algebraic laws every finite topology must satisfy. Shared by the property
// tests and the acceptance runner.

#include <cstdint>
#include <map>
#include <set>
#include <random>
#include <string>

#include "fintop/enumerate.hpp"
#include "fintop/set_classes.hpp"
#include "support/oracle.hpp"

namespace laws {

using fintop::SetClass;
using fintop::SubsetMask;
using fintop::Topology;

/// Violation count per law name; every law is always present.
using Tally = std::map<std::string, std::uint64_t>;

inline Tally empty_tally() {
    return {{"interior-closure duality", 0}, {"interior/closure idempotence", 0}, {"interior within, closure around", 0},
            {"interior equals opens-scan union", 0}, {"Open => SemiOpen => BetaOpen", 0},
            {"Open => Preopen => BetaOpen", 0}, {"preorder round trip", 0}, {"sCl fixes semi-closed sets", 0}};
}

inline void check_space(const Topology& t, Tally& tally) {
    const fintop::ClassTable table(t);
    auto fail = [&](const char* law, bool ok) {
        if (!ok) ++tally[law];
    };
    fintop::for_each_subset(t.size(), [&](SubsetMask a) {
        const auto i = t.interior(a);
        const auto c = t.closure(a);
        fail("interior-closure duality", c == t.interior(a.complement()).complement());
        fail("interior/closure idempotence", t.interior(i) == i && t.closure(c) == c);
        fail("interior within, closure around", i.subset_of(a) && a.subset_of(c));
        fail("interior equals opens-scan union", i.bits() == oracle::interior(t, a.bits()));
        const auto has = [&](SetClass k) { return table.has(a, k); };
        fail("Open => SemiOpen => BetaOpen",
             (!has(SetClass::Open) || has(SetClass::SemiOpen)) && (!has(SetClass::SemiOpen) || has(SetClass::BetaOpen)));
        fail("Open => Preopen => BetaOpen",
             (!has(SetClass::Open) || has(SetClass::Preopen)) && (!has(SetClass::Preopen) || has(SetClass::BetaOpen)));
        if (fintop::is_semi_closed(t, a)) fail("sCl fixes semi-closed sets", fintop::semi_closure(t, a) == a);
        return true;
    });
    fail("preorder round trip", fintop::topology_from_preorder(fintop::specialization_preorder(t)) == t);
}

/// Every topology with at most `max_n` points.
inline Tally exhaustive(std::size_t max_n) {
    auto tally = empty_tally();
    for (const auto& t : fintop::all_topologies_up_to(max_n)) check_space(t, tally);
    return tally;
}

/// `samples` random topologies on n points from a fixed seed.
inline Tally sampled(std::size_t n, std::size_t samples, std::uint64_t seed) {
    auto tally = empty_tally();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> density(0.0, 0.8);
    for (std::size_t i = 0; i < samples; ++i) check_space(oracle::random_topology(n, rng, density(rng)), tally);
    return tally;
}

inline std::uint64_t total(const Tally& t) {
    std::uint64_t sum = 0;
    for (const auto& [_, v] : t) sum += v;
    return sum;
}

}  // namespace laws
