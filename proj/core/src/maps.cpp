#include "fintop/maps.hpp"

#include <limits>
#include <string>

namespace fintop {

namespace {

std::vector<SubsetMask> fibers(std::size_t domain_points, std::size_t codomain_points,
                               std::span<const std::size_t> assignment) {
    std::vector<SubsetMask> out(codomain_points, SubsetMask::empty(domain_points));
    for (std::size_t x = 0; x < domain_points; ++x) out[assignment[x]] |= SubsetMask::singleton(domain_points, x);
    return out;
}

SubsetMask preimage_from_fibers(std::span<const SubsetMask> fib, std::size_t domain_points, SubsetMask b) {
    auto out = SubsetMask::empty(domain_points);
    for_each_point(b, [&](std::size_t y) { out |= fib[y]; });
    return out;
}

SubsetMask image_of(std::span<const std::size_t> assignment, std::size_t codomain_points, SubsetMask a) {
    Word w = 0;
    for_each_point(a, [&](std::size_t x) { w |= Word{1} << assignment[x]; });
    return SubsetMask::raw(w, codomain_points);
}

}  // namespace

SpaceMap::SpaceMap(std::shared_ptr<const Topology> domain, std::shared_ptr<const Topology> codomain,
                   std::vector<std::size_t> assignment)
    : domain_{std::move(domain)}, codomain_{std::move(codomain)}, assignment_{std::move(assignment)} {
    if (!domain_ || !codomain_) throw std::invalid_argument("map needs a domain and a codomain");
    if (assignment_.size() != domain_->size()) throw std::invalid_argument("map must assign every domain point");
    for (const auto y : assignment_)
        if (y >= codomain_->size()) throw std::invalid_argument("map target " + std::to_string(y) + " out of range");
}

SubsetMask SpaceMap::image(SubsetMask a) const {
    domain_->check_fits(a);
    return image_of(assignment_, codomain_->size(), a);
}

SubsetMask preimage(const SpaceMap& f, SubsetMask b) {
    f.codomain().check_fits(b);
    Word w = 0;
    for (std::size_t x = 0; x < f.domain().size(); ++x)
        if (b.contains(f(x))) w |= Word{1} << x;
    return SubsetMask::raw(w, f.domain().size());
}

std::string_view name(ContinuityClass c) noexcept {
    switch (c) {
        case ContinuityClass::Continuous: return "Continuous";
        case ContinuityClass::SemiContinuous: return "SemiContinuous";
        case ContinuityClass::BetaContinuous: return "BetaContinuous";
        case ContinuityClass::PreContinuous: return "PreContinuous";
        case ContinuityClass::LCContinuous: return "LCContinuous";
        case ContinuityClass::AContinuous: return "AContinuous";
        case ContinuityClass::BContinuous: return "BContinuous";
        case ContinuityClass::ABContinuous: return "ABContinuous";
        case ContinuityClass::IcContinuous: return "IcContinuous";
        case ContinuityClass::StronglyIrresolute: return "StronglyIrresolute";
    }
    return "?";
}

std::optional<SetClass> bound_set_class(ContinuityClass c) noexcept {
    switch (c) {
        case ContinuityClass::Continuous: return SetClass::Open;
        case ContinuityClass::SemiContinuous: return SetClass::SemiOpen;
        case ContinuityClass::BetaContinuous: return SetClass::BetaOpen;
        case ContinuityClass::PreContinuous: return SetClass::Preopen;
        case ContinuityClass::LCContinuous: return SetClass::LocallyClosed;
        case ContinuityClass::AContinuous: return SetClass::ASet;
        case ContinuityClass::BContinuous: return SetClass::BSet;
        case ContinuityClass::ABContinuous: return SetClass::ABSet;
        case ContinuityClass::IcContinuous: return SetClass::IcSet;
        case ContinuityClass::StronglyIrresolute: return std::nullopt;
    }
    return std::nullopt;
}

bool is_class_continuous(const SpaceMap& f, SetClass c) {
    for (const auto v : f.codomain().opens())
        if (!belongs(f.domain(), preimage(f, v), c)) return false;
    return true;
}

bool is_strongly_irresolute(const SpaceMap& f) {
    require_scannable(f.codomain().size());
    return for_each_subset(f.codomain().size(), [&](SubsetMask b) { return is_semi_regular(f.domain(), preimage(f, b)); });
}

bool strongly_irresolute_scl(const SpaceMap& f) {
    require_scannable(f.domain().size());
    return for_each_subset(f.domain().size(), [&](SubsetMask a) {
        return f.image(semi_closure(f.domain(), a)).subset_of(f.image(a));
    });
}

bool is_continuous_as(const SpaceMap& f, ContinuityClass c) {
    if (const auto bound = bound_set_class(c)) return is_class_continuous(f, *bound);
    return is_strongly_irresolute(f);
}

ContinuitySet classify_map(const ClassTable& domain, const Topology& codomain, std::span<const std::size_t> assignment) {
    const auto nx = domain.size();
    const auto ny = codomain.size();
    const auto fib = fibers(nx, ny, assignment);

    // Intersect the class flags of every open preimage.
    std::uint32_t common = ~std::uint32_t{0};
    for (const auto v : codomain.opens()) common &= domain.classes(preimage_from_fibers(fib, nx, v)).bits();

    ContinuitySet out;
    for (const auto c : kAllContinuityClasses) {
        if (const auto bound = bound_set_class(c)) out.set(c, (common >> static_cast<unsigned>(*bound)) & 1u);
    }
    const bool strongly = for_each_subset(ny, [&](SubsetMask b) {
        return domain.has(preimage_from_fibers(fib, nx, b), SetClass::SemiRegular);
    });
    out.set(ContinuityClass::StronglyIrresolute, strongly);
    return out;
}

ContinuitySet classify_map(const SpaceMap& f) {
    ContinuitySet out;
    for (const auto c : kAllContinuityClasses) out.set(c, is_continuous_as(f, c));
    return out;
}

bool strongly_irresolute_scl(const ClassTable& domain, std::size_t ny, std::span<const std::size_t> assignment) {
    return for_each_subset(domain.size(), [&](SubsetMask a) {
        return image_of(assignment, ny, domain.semi_closure(a)).subset_of(image_of(assignment, ny, a));
    });
}

std::uint64_t map_count(std::size_t domain_points, std::size_t codomain_points) noexcept {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < domain_points; ++i) {
        if (codomain_points != 0 && total > std::numeric_limits<std::uint64_t>::max() / codomain_points)
            return std::numeric_limits<std::uint64_t>::max();
        total *= codomain_points;
    }
    return total;
}

bool next_assignment(std::span<std::size_t> assignment, std::size_t codomain_points) noexcept {
    for (std::size_t i = assignment.size(); i-- > 0;) {
        if (++assignment[i] < codomain_points) return true;
        assignment[i] = 0;
    }
    return false;
}

std::uint64_t enumerate_maps(const std::shared_ptr<const Topology>& domain,
                             const std::shared_ptr<const Topology>& codomain,
                             const std::function<bool(const SpaceMap&)>& visit, std::uint64_t max_maps) {
    const auto nx = domain->size();
    const auto ny = codomain->size();
    const auto total = map_count(nx, ny);
    if (total > max_maps)
        throw BudgetExceeded(std::to_string(ny) + "^" + std::to_string(nx) + " maps exceed the cap of " +
                             std::to_string(max_maps));
    if (total == 0) return 0;
    std::vector<std::size_t> assignment(nx, 0);
    std::uint64_t visited = 0;
    do {
        ++visited;
        if (!visit(SpaceMap(domain, codomain, assignment))) break;
    } while (next_assignment(assignment, ny));
    return visited;
}

}  // namespace fintop
