#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "fintop/set_classes.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// Raised when an enumeration would exceed its configured cap.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A total function between the ground sets of two finite spaces.
class SpaceMap {
  public:
    /// Throws std::invalid_argument unless `assignment` has one in-range value per domain point.
    SpaceMap(std::shared_ptr<const Topology> domain, std::shared_ptr<const Topology> codomain,
             std::vector<std::size_t> assignment);

    const Topology& domain() const noexcept { return *domain_; }
    const Topology& codomain() const noexcept { return *codomain_; }
    const std::shared_ptr<const Topology>& domain_ptr() const noexcept { return domain_; }
    const std::shared_ptr<const Topology>& codomain_ptr() const noexcept { return codomain_; }
    std::span<const std::size_t> assignment() const noexcept { return assignment_; }
    std::size_t operator()(std::size_t x) const { return assignment_.at(x); }

    SubsetMask image(SubsetMask a) const;

  private:
    std::shared_ptr<const Topology> domain_;
    std::shared_ptr<const Topology> codomain_;
    std::vector<std::size_t> assignment_;
};

/// {x : f(x) in b}
SubsetMask preimage(const SpaceMap& f, SubsetMask b);

enum class ContinuityClass : std::uint8_t {
    Continuous,
    SemiContinuous,
    BetaContinuous,
    PreContinuous,
    LCContinuous,
    AContinuous,
    BContinuous,
    ABContinuous,
    IcContinuous,
    StronglyIrresolute,
};

inline constexpr std::array<ContinuityClass, 10> kAllContinuityClasses = {
    ContinuityClass::Continuous,    ContinuityClass::SemiContinuous, ContinuityClass::BetaContinuous,
    ContinuityClass::PreContinuous, ContinuityClass::LCContinuous,   ContinuityClass::AContinuous,
    ContinuityClass::BContinuous,   ContinuityClass::ABContinuous,   ContinuityClass::IcContinuous,
    ContinuityClass::StronglyIrresolute,
};

std::string_view name(ContinuityClass c) noexcept;

/// The set class whose membership of open preimages defines `c`; empty for StronglyIrresolute.
std::optional<SetClass> bound_set_class(ContinuityClass c) noexcept;

/// Preimage of every open set of the codomain is in class `c` of the domain.
bool is_class_continuous(const SpaceMap& f, SetClass c);
/// Preimage of every subset of the codomain is semi-regular.
bool is_strongly_irresolute(const SpaceMap& f);
/// f(sCl A) ⊆ f(A) for every subset A of the domain.
bool strongly_irresolute_scl(const SpaceMap& f);
bool is_continuous_as(const SpaceMap& f, ContinuityClass c);

class ContinuitySet {
  public:
    constexpr bool has(ContinuityClass c) const noexcept { return (bits_ >> static_cast<unsigned>(c)) & 1u; }
    constexpr void set(ContinuityClass c, bool on) noexcept {
        if (on) bits_ |= std::uint16_t(1u << static_cast<unsigned>(c));
    }
    constexpr bool operator==(const ContinuitySet&) const = default;

  private:
    std::uint16_t bits_ = 0;
};

/// All ten continuity verdicts, from a precomputed domain table.
///
/// `assignment[x]` is the image of domain point x in `codomain`.
ContinuitySet classify_map(const ClassTable& domain, const Topology& codomain,
                           std::span<const std::size_t> assignment);
ContinuitySet classify_map(const SpaceMap& f);

/// strongly_irresolute_scl over a precomputed domain table.
bool strongly_irresolute_scl(const ClassTable& domain, std::size_t codomain_points,
                             std::span<const std::size_t> assignment);

/// Visits all n_y^n_x maps in lexicographic order of the assignment (point 0 most significant).
/// The visitor returns false to stop. Returns the number visited.
/// Throws BudgetExceeded when the total exceeds `max_maps`.
std::uint64_t enumerate_maps(const std::shared_ptr<const Topology>& domain,
                             const std::shared_ptr<const Topology>& codomain,
                             const std::function<bool(const SpaceMap&)>& visit, std::uint64_t max_maps);

/// n_y^n_x, saturating at UINT64_MAX.
std::uint64_t map_count(std::size_t domain_points, std::size_t codomain_points) noexcept;

/// Advances `assignment` to the next map in lexicographic order; false after the last.
bool next_assignment(std::span<std::size_t> assignment, std::size_t codomain_points) noexcept;

}  // namespace fintop
