#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fintop/subset_mask.hpp"

namespace fintop {

/// Raised when a family of sets or a relation does not describe a topology.
class TopologyError : public std::runtime_error {
  public:
    enum class Kind {
        MaskOutOfRange,
        MissingEmptyOrFull,
        NotClosedUnderUnion,
        NotClosedUnderIntersection,
        NotAPreorder,
    };

    TopologyError(Kind kind, std::string what, std::optional<std::pair<SubsetMask, SubsetMask>> witness = {});

    Kind kind() const noexcept { return kind_; }
    /// The offending pair of opens for the closure violations.
    const std::optional<std::pair<SubsetMask, SubsetMask>>& witness() const noexcept { return witness_; }

  private:
    Kind kind_;
    std::optional<std::pair<SubsetMask, SubsetMask>> witness_;
};

const char* to_string(TopologyError::Kind kind) noexcept;

/// Raised by operations that scan all subsets of a ground set that is too large for it.
class GroundSetTooLarge : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Upper bound on n for operations that scan all 2^n subsets.
inline constexpr std::size_t kMaxScanPoints = 24;

void require_scannable(std::size_t n, std::size_t limit = kMaxScanPoints);

/// A validated finite topology on {0, ..., n-1}.
///
/// Immutable after construction. `opens()` is sorted canonically (cardinality,
/// then numeric value) so two topologies are equal iff their open lists are.
class Topology {
  public:
    std::size_t size() const noexcept { return n_; }
    std::span<const SubsetMask> opens() const noexcept { return opens_; }

    /// Intersection of all opens containing x.
    SubsetMask minimal_neighborhood(std::size_t x) const { return min_nbhd_.at(x); }
    std::span<const SubsetMask> minimal_neighborhoods() const noexcept { return min_nbhd_; }

    SubsetMask empty_set() const noexcept { return SubsetMask::raw(0, n_); }
    SubsetMask ground_set() const noexcept { return SubsetMask::raw(low_bits(n_), n_); }

    SubsetMask interior(SubsetMask a) const noexcept;
    SubsetMask closure(SubsetMask a) const noexcept { return interior(a.complement()).complement(); }
    bool is_open(SubsetMask a) const noexcept { return interior(a) == a; }
    bool is_closed(SubsetMask a) const noexcept { return is_open(a.complement()); }

    /// Throws std::invalid_argument if `a` lives over a different ground set.
    void check_fits(SubsetMask a) const;

    bool operator==(const Topology& o) const { return n_ == o.n_ && opens_ == o.opens_; }

  private:
    friend Topology build_topology(std::size_t, std::span<const SubsetMask>);
    friend Topology topology_from_minimal_neighborhoods(std::size_t, std::span<const SubsetMask>);

    Topology(std::size_t n, std::vector<SubsetMask> opens, std::vector<SubsetMask> min_nbhd)
        : n_{n}, opens_{std::move(opens)}, min_nbhd_{std::move(min_nbhd)} {}

    std::size_t n_ = 0;
    std::vector<SubsetMask> opens_;
    std::vector<SubsetMask> min_nbhd_;
};

/// Validates `opens` as a topology on n points. Input order and duplicates are irrelevant.
/// Closure is checked pairwise, which is sufficient on a finite set.
Topology build_topology(std::size_t n, std::span<const SubsetMask> opens);

/// Topology whose minimal neighborhoods are `rows`: the opens are all unions of rows.
/// Requires x in rows[x] and (y in rows[x] implies rows[y] subset of rows[x]); throws NotAPreorder otherwise.
Topology topology_from_minimal_neighborhoods(std::size_t n, std::span<const SubsetMask> rows);

/// Smallest topology containing every set in `sets`.
Topology generate_from_subbasis(std::size_t n, std::span<const SubsetMask> sets);

Topology discrete_topology(std::size_t n);
Topology indiscrete_topology(std::size_t n);

inline SubsetMask interior(const Topology& t, SubsetMask a) {
    t.check_fits(a);
    return t.interior(a);
}
inline SubsetMask closure(const Topology& t, SubsetMask a) {
    t.check_fits(a);
    return t.closure(a);
}

/// Reflexive, transitive relation on {0, ..., n-1}; leq(x, y) reads "x is in the closure of {y}".
class Preorder {
  public:
    Preorder() = default;
    /// Row x holds {y : leq(x, y)}. Not validated here.
    Preorder(std::size_t n, std::vector<SubsetMask> rows);
    /// Builds from an n-by-n boolean matrix.
    static Preorder from_matrix(const std::vector<std::vector<bool>>& leq);

    std::size_t size() const noexcept { return n_; }
    bool leq(std::size_t x, std::size_t y) const { return rows_.at(x).contains(y); }
    std::span<const SubsetMask> rows() const noexcept { return rows_; }
    bool is_reflexive() const noexcept;
    bool is_transitive() const noexcept;

    bool operator==(const Preorder&) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<SubsetMask> rows_;
};

/// leq(x, y) iff x lies in closure({y}).
Preorder specialization_preorder(const Topology& t);

/// Opens are the sets A with (x in A and leq(x, y)) implying y in A.
Topology topology_from_preorder(const Preorder& p);

}  // namespace fintop
