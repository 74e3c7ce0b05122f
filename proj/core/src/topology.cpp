#include "fintop/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace fintop {

TopologyError::TopologyError(Kind kind, std::string what, std::optional<std::pair<SubsetMask, SubsetMask>> witness)
    : std::runtime_error(std::move(what)), kind_{kind}, witness_{witness} {}

const char* to_string(TopologyError::Kind kind) noexcept {
    switch (kind) {
        case TopologyError::Kind::MaskOutOfRange: return "MaskOutOfRange";
        case TopologyError::Kind::MissingEmptyOrFull: return "MissingEmptyOrFull";
        case TopologyError::Kind::NotClosedUnderUnion: return "NotClosedUnderUnion";
        case TopologyError::Kind::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
        case TopologyError::Kind::NotAPreorder: return "NotAPreorder";
    }
    return "?";
}

void require_scannable(std::size_t n, std::size_t limit) {
    if (n > limit)
        throw GroundSetTooLarge("ground set of " + std::to_string(n) + " points exceeds the subset-scan limit of " +
                                std::to_string(limit));
}

namespace {

std::string bits_text(SubsetMask m) {
    std::string s = "{";
    bool first = true;
    for_each_point(m, [&](std::size_t x) {
        if (!first) s += ',';
        s += std::to_string(x);
        first = false;
    });
    return s + "}";
}

std::vector<SubsetMask> minimal_neighborhoods_of(std::size_t n, std::span<const SubsetMask> opens) {
    std::vector<SubsetMask> rows(n, SubsetMask::full(n));
    for (const auto u : opens) for_each_point(u, [&](std::size_t x) { rows[x] &= u; });
    return rows;
}

/// All unions of `rows`, including the empty union.
std::vector<SubsetMask> unions_of(std::size_t n, std::span<const SubsetMask> rows) {
    std::vector<SubsetMask> out{SubsetMask::empty(n)};
    std::unordered_set<Word> seen{0};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto r : rows) {
            const auto u = out[i] | r;
            if (seen.insert(u.bits()).second) out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace

SubsetMask Topology::interior(SubsetMask a) const noexcept {
    Word in = 0;
    for (std::size_t x = 0; x < n_; ++x)
        if (min_nbhd_[x].subset_of(a)) in |= Word{1} << x;
    return SubsetMask::raw(in, n_);
}

void Topology::check_fits(SubsetMask a) const {
    if (a.size() != n_)
        throw std::invalid_argument("subset over " + std::to_string(a.size()) + " points used with a topology on " +
                                    std::to_string(n_));
}

Topology build_topology(std::size_t n, std::span<const SubsetMask> opens) {
    if (n > kMaxPoints) throw TopologyError(TopologyError::Kind::MaskOutOfRange, "ground set exceeds kMaxPoints");
    std::vector<SubsetMask> sorted;
    sorted.reserve(opens.size());
    for (const auto u : opens) {
        if (u.size() != n || (u.bits() & ~low_bits(n)) != 0)
            throw TopologyError(TopologyError::Kind::MaskOutOfRange,
                                "open set " + bits_text(u) + " does not fit a ground set of " + std::to_string(n));
        sorted.push_back(u);
    }
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const auto member = [&](SubsetMask m) {
        return std::binary_search(sorted.begin(), sorted.end(), m, canonical_less);
    };
    if (!member(SubsetMask::empty(n)) || !member(SubsetMask::full(n)))
        throw TopologyError(TopologyError::Kind::MissingEmptyOrFull, "the empty set and the full set must both be open");

    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const auto u = sorted[i];
            const auto v = sorted[j];
            if (!member(u | v))
                throw TopologyError(TopologyError::Kind::NotClosedUnderUnion,
                                    "union of " + bits_text(u) + " and " + bits_text(v) + " is not open",
                                    std::pair{u, v});
            if (!member(u & v))
                throw TopologyError(TopologyError::Kind::NotClosedUnderIntersection,
                                    "intersection of " + bits_text(u) + " and " + bits_text(v) + " is not open",
                                    std::pair{u, v});
        }
    }
    auto rows = minimal_neighborhoods_of(n, sorted);
    return Topology(n, std::move(sorted), std::move(rows));
}

Topology topology_from_minimal_neighborhoods(std::size_t n, std::span<const SubsetMask> rows) {
    if (rows.size() != n) throw TopologyError(TopologyError::Kind::NotAPreorder, "expected one row per point");
    for (std::size_t x = 0; x < n; ++x) {
        if (rows[x].size() != n || !rows[x].contains(x))
            throw TopologyError(TopologyError::Kind::NotAPreorder, "relation is not reflexive at " + std::to_string(x));
        bool ok = true;
        for_each_point(rows[x], [&](std::size_t y) { ok = ok && rows[y].subset_of(rows[x]); });
        if (!ok)
            throw TopologyError(TopologyError::Kind::NotAPreorder, "relation is not transitive at " + std::to_string(x));
    }
    auto opens = unions_of(n, rows);
    return Topology(n, std::move(opens), std::vector<SubsetMask>(rows.begin(), rows.end()));
}

Topology generate_from_subbasis(std::size_t n, std::span<const SubsetMask> sets) {
    // In a finite space the generated topology has, as minimal neighborhood of x,
    // the intersection of the subbasic sets containing x.
    for (const auto s : sets)
        if (s.size() != n) throw std::invalid_argument("subbasis set does not fit the ground set");
    return topology_from_minimal_neighborhoods(n, minimal_neighborhoods_of(n, sets));
}

Topology discrete_topology(std::size_t n) {
    std::vector<SubsetMask> rows;
    for (std::size_t x = 0; x < n; ++x) rows.push_back(SubsetMask::singleton(n, x));
    return topology_from_minimal_neighborhoods(n, rows);
}

Topology indiscrete_topology(std::size_t n) {
    return topology_from_minimal_neighborhoods(n, std::vector<SubsetMask>(n, SubsetMask::full(n)));
}

Preorder::Preorder(std::size_t n, std::vector<SubsetMask> rows) : n_{n}, rows_{std::move(rows)} {
    if (rows_.size() != n) throw std::invalid_argument("preorder needs one row per point");
    for (const auto r : rows_)
        if (r.size() != n) throw std::invalid_argument("preorder row does not fit the ground set");
}

Preorder Preorder::from_matrix(const std::vector<std::vector<bool>>& leq) {
    const auto n = leq.size();
    std::vector<SubsetMask> rows;
    for (const auto& line : leq) {
        if (line.size() != n) throw std::invalid_argument("preorder matrix must be square");
        Word w = 0;
        for (std::size_t y = 0; y < n; ++y)
            if (line[y]) w |= Word{1} << y;
        rows.push_back(SubsetMask{w, n});
    }
    return Preorder(n, std::move(rows));
}

bool Preorder::is_reflexive() const noexcept {
    for (std::size_t x = 0; x < n_; ++x)
        if (!rows_[x].contains(x)) return false;
    return true;
}

bool Preorder::is_transitive() const noexcept {
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y)
            if (rows_[x].contains(y) && !rows_[y].subset_of(rows_[x])) return false;
    return true;
}

Preorder specialization_preorder(const Topology& t) {
    const auto n = t.size();
    std::vector<SubsetMask> rows(n, SubsetMask::empty(n));
    for (std::size_t y = 0; y < n; ++y) {
        const auto cl = t.closure(SubsetMask::singleton(n, y));
        for_each_point(cl, [&](std::size_t x) { rows[x] |= SubsetMask::singleton(n, y); });
    }
    return Preorder(n, std::move(rows));
}

Topology topology_from_preorder(const Preorder& p) {
    if (!p.is_reflexive()) throw TopologyError(TopologyError::Kind::NotAPreorder, "relation is not reflexive");
    if (!p.is_transitive()) throw TopologyError(TopologyError::Kind::NotAPreorder, "relation is not transitive");
    return topology_from_minimal_neighborhoods(p.size(), p.rows());
}

}  // namespace fintop
