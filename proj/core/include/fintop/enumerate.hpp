#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fintop/maps.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// Caps on exhaustive work.
struct EnumerationBudget {
    std::size_t max_n = 6;
    std::uint64_t max_spaces = 10'000'000;
    std::uint64_t max_maps = 1'000'000'000;

    /// Throws std::invalid_argument unless every cap is positive.
    void validate() const;
};

/// Visits every topology on {0, ..., n-1} exactly once.
///
/// Topologies are produced from their minimal-neighborhood rows, which form a
/// preorder; rows are enumerated lexicographically (row 0 first, each row in
/// ascending numeric order) and that order is the canonical enumeration order.
/// The visitor returns false to stop. Returns the number visited.
/// Throws BudgetExceeded when n > budget.max_n or the count passes budget.max_spaces.
std::uint64_t enumerate_topologies(std::size_t n, const std::function<bool(const Topology&)>& visit,
                                   const EnumerationBudget& budget = {});

/// The admissible minimal neighborhoods of point 0, in enumeration order.
/// Enumeration restricted to one of them is a contiguous block of the full stream.
std::vector<SubsetMask> first_row_choices(std::size_t n);

/// The block of enumerate_topologies(n) whose minimal neighborhood of point 0 is `first_row`.
std::uint64_t enumerate_topologies_with_first_row(std::size_t n, SubsetMask first_row,
                                                  const std::function<bool(const Topology&)>& visit);

/// Materializes every topology for n <= max_n (n ascending, canonical order within n).
std::vector<Topology> all_topologies_up_to(std::size_t max_n, const EnumerationBudget& budget = {});

std::uint64_t count_topologies(std::size_t n, const EnumerationBudget& budget = {});

/// Oracle: filters all 2^(2^n - 2) families of proper nonempty subsets for the topology axioms.
/// Limited to n <= 4; throws BudgetExceeded otherwise.
std::vector<Topology> enumerate_topologies_naive(std::size_t n);

/// Oracle: counts reflexive relations on n points that equal their own transitive closure.
/// Limited to n <= 5; throws BudgetExceeded otherwise.
std::uint64_t count_preorders_by_closure(std::size_t n);

}  // namespace fintop
