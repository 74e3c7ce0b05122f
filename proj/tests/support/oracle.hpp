#pragma once

// Brute-force reference implementations used by the tests. Everything here
// works from the list of open sets alone and never calls the library's
// interior/closure or classifiers, so agreement is a real cross-check.

#include <cstdint>
#include <random>
#include <vector>

#include "fintop/topology.hpp"

namespace oracle {

using fintop::SubsetMask;
using fintop::Topology;
using Word = std::uint64_t;

inline Word full(const Topology& t) { return fintop::low_bits(t.size()); }

inline std::vector<Word> opens(const Topology& t) {
    std::vector<Word> out;
    for (const auto u : t.opens()) out.push_back(u.bits());
    return out;
}

inline std::vector<Word> closeds(const Topology& t) {
    std::vector<Word> out;
    for (const auto u : t.opens()) out.push_back(~u.bits() & full(t));
    return out;
}

inline bool is_open(const Topology& t, Word a) {
    for (const auto u : opens(t))
        if (u == a) return true;
    return false;
}

inline bool is_closed(const Topology& t, Word a) { return is_open(t, ~a & full(t)); }

/// Union of every open set inside a.
inline Word interior(const Topology& t, Word a) {
    Word out = 0;
    for (const auto u : opens(t))
        if ((u & ~a) == 0) out |= u;
    return out;
}

/// Intersection of every closed set containing a.
inline Word closure(const Topology& t, Word a) {
    Word out = full(t);
    for (const auto c : closeds(t))
        if ((a & ~c) == 0) out &= c;
    return out;
}

inline bool subset(Word a, Word b) { return (a & ~b) == 0; }

inline bool regular_open(const Topology& t, Word a) { return interior(t, closure(t, a)) == a; }
inline bool regular_closed(const Topology& t, Word a) { return closure(t, interior(t, a)) == a; }
inline bool semi_open(const Topology& t, Word a) { return subset(a, closure(t, interior(t, a))); }
inline bool semi_closed(const Topology& t, Word a) { return subset(interior(t, closure(t, a)), a); }
inline bool semi_regular(const Topology& t, Word a) { return semi_open(t, a) && semi_closed(t, a); }
inline bool preopen(const Topology& t, Word a) { return subset(a, interior(t, closure(t, a))); }
inline bool preclosed(const Topology& t, Word a) { return subset(closure(t, interior(t, a)), a); }
inline bool beta_open(const Topology& t, Word a) { return subset(a, closure(t, interior(t, closure(t, a)))); }
inline bool beta_closed(const Topology& t, Word a) { return subset(interior(t, closure(t, interior(t, a))), a); }
inline bool dense(const Topology& t, Word a) { return closure(t, a) == full(t); }

/// Some open U and some V satisfying `partner` with U & V == a.
template <class Partner>
bool open_meets(const Topology& t, Word a, Partner partner) {
    for (const auto u : opens(t))
        for (Word v = 0; v <= full(t); ++v)
            if ((u & v) == a && partner(v)) return true;
    return false;
}

inline bool locally_closed(const Topology& t, Word a) {
    return open_meets(t, a, [&](Word v) { return is_closed(t, v); });
}
inline bool a_set(const Topology& t, Word a) {
    return open_meets(t, a, [&](Word v) { return regular_closed(t, v); });
}
inline bool b_set(const Topology& t, Word a) {
    return open_meets(t, a, [&](Word v) { return semi_closed(t, v); });
}
inline bool ab_set(const Topology& t, Word a) {
    return open_meets(t, a, [&](Word v) { return semi_regular(t, v); });
}

/// int(a) is relatively closed in a: int(a) = F & a for some closed F.
inline bool ic_set(const Topology& t, Word a) {
    const Word i = interior(t, a);
    for (const auto c : closeds(t))
        if ((c & a) == i) return true;
    return false;
}

/// Intersection of every semi-closed superset.
inline Word semi_closure(const Topology& t, Word a) {
    Word out = full(t);
    for (Word v = 0; v <= full(t); ++v)
        if (subset(a, v) && semi_closed(t, v)) out &= v;
    return out;
}

inline bool semi_connected(const Topology& t) {
    for (Word a = 1; a < full(t); ++a)
        if (semi_open(t, a) && semi_open(t, ~a & full(t))) return false;
    return true;
}

/// Family-level axioms check, independent of build_topology.
inline bool is_topology(std::size_t n, const std::vector<Word>& family) {
    const Word x = fintop::low_bits(n);
    auto has = [&](Word w) {
        for (const auto f : family)
            if (f == w) return true;
        return false;
    };
    if (!has(0) || !has(x)) return false;
    for (const auto u : family)
        for (const auto v : family)
            if (!has(u | v) || !has(u & v)) return false;
    return true;
}

/// A random topology on n points: random reflexive relation, transitively closed.
inline Topology random_topology(std::size_t n, std::mt19937_64& rng, double density = 0.3) {
    std::bernoulli_distribution edge(density);
    std::vector<Word> rows(n);
    for (std::size_t x = 0; x < n; ++x) {
        rows[x] = Word{1} << x;
        for (std::size_t y = 0; y < n; ++y)
            if (edge(rng)) rows[x] |= Word{1} << y;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            if ((rows[x] >> k) & 1u) rows[x] |= rows[k];
    // The open sets are the up-closed sets of the relation: unions of rows.
    std::vector<SubsetMask> family;
    for (Word a = 0; a <= fintop::low_bits(n); ++a) {
        bool up = true;
        for (std::size_t x = 0; x < n && up; ++x)
            if (((a >> x) & 1u) && (rows[x] & ~a) != 0) up = false;
        if (up) family.emplace_back(a, n);
    }
    return fintop::build_topology(n, family);
}

}  // namespace oracle
