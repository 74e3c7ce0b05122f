#include "fintop/enumerate.hpp"

#include <algorithm>
#include <string>

namespace fintop {

void EnumerationBudget::validate() const {
    if (max_n == 0 || max_spaces == 0 || max_maps == 0)
        throw std::invalid_argument("enumeration budget caps must be positive");
}

namespace {

class PreorderSearch {
  public:
    PreorderSearch(std::size_t n, const std::function<bool(const Topology&)>& visit, std::uint64_t max_spaces)
        : n_{n}, rows_(n), visit_{visit}, max_spaces_{max_spaces} {}

    /// Enumerates from point `k` on with rows[0..k) already placed. Returns false once stopped.
    bool run(std::size_t k) {
        if (k == n_) {
            if (++visited_ > max_spaces_)
                throw BudgetExceeded("more than " + std::to_string(max_spaces_) + " topologies on " +
                                     std::to_string(n_) + " points");
            return visit_(topology_from_minimal_neighborhoods(n_, rows_));
        }
        return for_each_superset(SubsetMask::singleton(n_, k), [&](SubsetMask r) {
            if (!consistent(k, r)) return true;
            rows_[k] = r;
            return run(k + 1);
        });
    }

    void place_first(SubsetMask r) { rows_[0] = r; }
    std::uint64_t visited() const noexcept { return visited_; }

  private:
    /// Transitivity between the candidate row of k and every earlier row.
    bool consistent(std::size_t k, SubsetMask r) const {
        for (std::size_t i = 0; i < k; ++i) {
            if (r.contains(i) && !rows_[i].subset_of(r)) return false;
            if (rows_[i].contains(k) && !r.subset_of(rows_[i])) return false;
        }
        return true;
    }

    std::size_t n_;
    std::vector<SubsetMask> rows_;
    const std::function<bool(const Topology&)>& visit_;
    std::uint64_t max_spaces_;
    std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t enumerate_topologies(std::size_t n, const std::function<bool(const Topology&)>& visit,
                                   const EnumerationBudget& budget) {
    budget.validate();
    if (n > budget.max_n || n > kMaxScanPoints)
        throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the enumeration limit of " +
                             std::to_string(std::min(budget.max_n, kMaxScanPoints)));
    PreorderSearch search(n, visit, budget.max_spaces);
    search.run(0);
    return search.visited();
}

std::vector<SubsetMask> first_row_choices(std::size_t n) {
    std::vector<SubsetMask> out;
    if (n == 0) return out;
    for_each_superset(SubsetMask::singleton(n, 0), [&](SubsetMask r) {
        out.push_back(r);
        return true;
    });
    return out;
}

std::uint64_t enumerate_topologies_with_first_row(std::size_t n, SubsetMask first_row,
                                                  const std::function<bool(const Topology&)>& visit) {
    if (n == 0 || first_row.size() != n || !first_row.contains(0))
        throw std::invalid_argument("first row must contain point 0");
    PreorderSearch search(n, visit, ~std::uint64_t{0});
    search.place_first(first_row);
    search.run(1);
    return search.visited();
}

std::vector<Topology> all_topologies_up_to(std::size_t max_n, const EnumerationBudget& budget) {
    std::vector<Topology> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        enumerate_topologies(
            n,
            [&](const Topology& t) {
                // The cap is on the whole list, not per size.
                if (out.size() >= budget.max_spaces)
                    throw BudgetExceeded("more than " + std::to_string(budget.max_spaces) + " spaces");
                out.push_back(t);
                return true;
            },
            budget);
    }
    return out;
}

std::uint64_t count_topologies(std::size_t n, const EnumerationBudget& budget) {
    return enumerate_topologies(n, [](const Topology&) { return true; }, budget);
}

std::vector<Topology> enumerate_topologies_naive(std::size_t n) {
    if (n > 4) throw BudgetExceeded("the family-filter oracle is limited to n <= 4");
    const auto full = SubsetMask::full(n);
    std::vector<SubsetMask> proper;
    for (Word w = 1; w + 1 < (Word{1} << n); ++w) proper.push_back(SubsetMask::raw(w, n));

    std::vector<Topology> out;
    const std::uint64_t families = std::uint64_t{1} << proper.size();
    std::vector<bool> in_family(std::size_t{1} << n);
    std::vector<SubsetMask> members;
    for (std::uint64_t f = 0; f < families; ++f) {
        std::fill(in_family.begin(), in_family.end(), false);
        members.assign({SubsetMask::empty(n), full});
        in_family[0] = in_family[full.bits()] = true;
        for (std::size_t i = 0; i < proper.size(); ++i) {
            if ((f >> i) & 1u) {
                members.push_back(proper[i]);
                in_family[proper[i].bits()] = true;
            }
        }
        bool closed = true;
        for (std::size_t i = 0; closed && i < members.size(); ++i)
            for (std::size_t j = i + 1; closed && j < members.size(); ++j)
                closed = in_family[(members[i] | members[j]).bits()] && in_family[(members[i] & members[j]).bits()];
        if (closed) out.push_back(build_topology(n, members));
    }
    return out;
}

std::uint64_t count_preorders_by_closure(std::size_t n) {
    if (n > 5) throw BudgetExceeded("the transitive-closure oracle is limited to n <= 5");
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y) cells.emplace_back(x, y);

    std::uint64_t count = 0;
    const std::uint64_t relations = std::uint64_t{1} << cells.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::uint64_t r = 0; r < relations; ++r) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) rel[x][y] = x == y;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if ((r >> i) & 1u) rel[cells[i].first][cells[i].second] = true;
        auto closure = rel;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    if (closure[x][k] && closure[k][y]) closure[x][y] = true;
        if (closure == rel) ++count;
    }
    return count;
}

}  // namespace fintop
