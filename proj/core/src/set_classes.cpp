#include "fintop/set_classes.hpp"

#include <algorithm>

namespace fintop {

namespace {

constexpr std::array<std::string_view, kSetClassCount> kNames = {
    "Open",     "Closed",    "Clopen",        "Dense",    "RegularOpen", "RegularClosed", "SemiOpen",
    "SemiClosed", "SemiRegular", "Preopen",   "Preclosed", "BetaOpen",  "BetaClosed",    "LocallyClosed",
    "ASet",     "BSet",      "ABSet",         "IcSet",    "TSet",
};

std::vector<SubsetMask> opens_numeric(const Topology& t) {
    std::vector<SubsetMask> out(t.opens().begin(), t.opens().end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Least (U, V) with U open, V in the family, U ∩ V == a.
template <typename InFamily>
std::optional<Decomposition> scan_decompositions(const Topology& t, SubsetMask a, InFamily&& in_family) {
    t.check_fits(a);
    require_scannable(t.size());
    std::optional<Decomposition> found;
    for (const auto u : opens_numeric(t)) {
        if (!a.subset_of(u)) continue;
        // V ∩ U == a forces V ⊆ a ∪ (X \ U).
        const auto room = a | u.complement();
        const Word free = (room - a).bits();
        Word extra = 0;
        do {
            const auto v = SubsetMask::raw(a.bits() | extra, a.size());
            if (in_family(v)) {
                found = Decomposition{u, v};
                return found;
            }
            extra = (extra - free) & free;
        } while (extra != 0);
    }
    return found;
}

}  // namespace

std::string_view name(SetClass c) noexcept { return kNames[static_cast<std::size_t>(c)]; }

std::optional<SetClass> parse_set_class(std::string_view text) noexcept {
    for (const auto c : kAllSetClasses)
        if (name(c) == text) return c;
    return std::nullopt;
}

bool is_open(const Topology& t, SubsetMask a) { return interior(t, a) == a; }
bool is_closed(const Topology& t, SubsetMask a) { return closure(t, a) == a; }
bool is_clopen(const Topology& t, SubsetMask a) { return is_open(t, a) && is_closed(t, a); }
bool is_dense(const Topology& t, SubsetMask a) { return closure(t, a).is_full(); }

bool is_regular_open(const Topology& t, SubsetMask a) { return t.interior(closure(t, a)) == a; }
bool is_regular_closed(const Topology& t, SubsetMask a) { return t.closure(interior(t, a)) == a; }

bool is_semi_open(const Topology& t, SubsetMask a) { return a.subset_of(t.closure(interior(t, a))); }
bool is_semi_closed(const Topology& t, SubsetMask a) { return t.interior(closure(t, a)).subset_of(a); }
bool is_t_set(const Topology& t, SubsetMask a) { return interior(t, a) == t.interior(t.closure(a)); }
bool is_semi_regular(const Topology& t, SubsetMask a) { return is_semi_open(t, a) && is_semi_closed(t, a); }

bool is_preopen(const Topology& t, SubsetMask a) { return a.subset_of(t.interior(closure(t, a))); }
bool is_preclosed(const Topology& t, SubsetMask a) { return t.closure(interior(t, a)).subset_of(a); }

bool is_beta_open(const Topology& t, SubsetMask a) { return a.subset_of(t.closure(t.interior(closure(t, a)))); }
bool is_beta_closed(const Topology& t, SubsetMask a) {
    return t.interior(t.closure(interior(t, a))).subset_of(a);
}

bool is_ic_set(const Topology& t, SubsetMask a) {
    const auto in = interior(t, a);
    return (a & t.closure(in)).subset_of(in);
}

std::optional<Decomposition> locally_closed_witness(const Topology& t, SubsetMask a) {
    return scan_decompositions(t, a, [&](SubsetMask v) { return t.is_closed(v); });
}
std::optional<Decomposition> a_set_witness(const Topology& t, SubsetMask a) {
    return scan_decompositions(t, a, [&](SubsetMask v) { return is_regular_closed(t, v); });
}
std::optional<Decomposition> b_set_witness(const Topology& t, SubsetMask a) {
    return scan_decompositions(t, a, [&](SubsetMask v) { return is_semi_closed(t, v); });
}
std::optional<Decomposition> ab_set_witness(const Topology& t, SubsetMask a) {
    return scan_decompositions(t, a, [&](SubsetMask v) { return is_semi_regular(t, v); });
}

bool is_locally_closed(const Topology& t, SubsetMask a) { return locally_closed_witness(t, a).has_value(); }
bool is_a_set(const Topology& t, SubsetMask a) { return a_set_witness(t, a).has_value(); }
bool is_b_set(const Topology& t, SubsetMask a) { return b_set_witness(t, a).has_value(); }
bool is_ab_set(const Topology& t, SubsetMask a) { return ab_set_witness(t, a).has_value(); }

bool belongs(const Topology& t, SubsetMask a, SetClass c) {
    switch (c) {
        case SetClass::Open: return is_open(t, a);
        case SetClass::Closed: return is_closed(t, a);
        case SetClass::Clopen: return is_clopen(t, a);
        case SetClass::Dense: return is_dense(t, a);
        case SetClass::RegularOpen: return is_regular_open(t, a);
        case SetClass::RegularClosed: return is_regular_closed(t, a);
        case SetClass::SemiOpen: return is_semi_open(t, a);
        case SetClass::SemiClosed: return is_semi_closed(t, a);
        case SetClass::SemiRegular: return is_semi_regular(t, a);
        case SetClass::Preopen: return is_preopen(t, a);
        case SetClass::Preclosed: return is_preclosed(t, a);
        case SetClass::BetaOpen: return is_beta_open(t, a);
        case SetClass::BetaClosed: return is_beta_closed(t, a);
        case SetClass::LocallyClosed: return is_locally_closed(t, a);
        case SetClass::ASet: return is_a_set(t, a);
        case SetClass::BSet: return is_b_set(t, a);
        case SetClass::ABSet: return is_ab_set(t, a);
        case SetClass::IcSet: return is_ic_set(t, a);
        case SetClass::TSet: return is_t_set(t, a);
    }
    return false;
}

SetClassSet classify_set(const Topology& t, SubsetMask a) {
    SetClassSet out;
    for (const auto c : kAllSetClasses) out.set(c, belongs(t, a, c));
    return out;
}

SubsetMask semi_closure(const Topology& t, SubsetMask a) {
    t.check_fits(a);
    require_scannable(t.size());
    auto acc = t.ground_set();
    for_each_superset(a, [&](SubsetMask v) {
        if (is_semi_closed(t, v)) acc &= v;
        return true;
    });
    return acc;
}

SubsetMask semi_closure_closed_form(const Topology& t, SubsetMask a) { return a | t.interior(closure(t, a)); }

std::optional<SubsetMask> semi_regular_dmn_witness(const Topology& t, SubsetMask a) {
    t.check_fits(a);
    for (const auto u : opens_numeric(t)) {
        if (u.subset_of(a) && a.subset_of(t.closure(u)) && is_regular_open(t, u)) return u;
    }
    return std::nullopt;
}
bool is_semi_regular_dmn(const Topology& t, SubsetMask a) { return semi_regular_dmn_witness(t, a).has_value(); }

std::optional<SubsetMask> b_set_yalvac_witness(const Topology& t, SubsetMask a) {
    const auto scl = semi_closure(t, a);
    for (const auto u : opens_numeric(t))
        if ((u & scl) == a) return u;
    return std::nullopt;
}
bool is_b_set_yalvac(const Topology& t, SubsetMask a) { return b_set_yalvac_witness(t, a).has_value(); }

bool is_ic_set_subspace(const Topology& t, SubsetMask a) {
    const auto target = a - interior(t, a);
    for (const auto u : t.opens())
        if ((u & a) == target) return true;
    return false;
}

ClassTable::ClassTable(Topology t, std::size_t max_points) : topology_{std::move(t)} {
    const auto n = topology_.size();
    require_scannable(n, max_points);
    const std::size_t count = std::size_t{1} << n;
    interior_.resize(count);
    closure_.resize(count);
    flags_.resize(count);

    for (std::size_t i = 0; i < count; ++i) interior_[i] = topology_.interior(SubsetMask::raw(i, n));
    for (std::size_t i = 0; i < count; ++i)
        closure_[i] = interior_[SubsetMask::raw(i, n).complement().bits()].complement();

    const auto in = [&](SubsetMask a) { return interior_[a.bits()]; };
    const auto cl = [&](SubsetMask a) { return closure_[a.bits()]; };

    for (std::size_t i = 0; i < count; ++i) {
        const auto a = SubsetMask::raw(i, n);
        const auto ia = in(a);
        const auto ca = cl(a);
        const auto ica = in(ca);
        const auto cia = cl(ia);
        auto& f = flags_[i];
        const bool open = ia == a;
        const bool closed = ca == a;
        const bool semi_open = a.subset_of(cia);
        const bool semi_closed = ica.subset_of(a);
        f.set(SetClass::Open, open);
        f.set(SetClass::Closed, closed);
        f.set(SetClass::Clopen, open && closed);
        f.set(SetClass::Dense, ca.is_full());
        f.set(SetClass::RegularOpen, ica == a);
        f.set(SetClass::RegularClosed, cia == a);
        f.set(SetClass::SemiOpen, semi_open);
        f.set(SetClass::SemiClosed, semi_closed);
        f.set(SetClass::TSet, ia == ica);
        f.set(SetClass::SemiRegular, semi_open && semi_closed);
        f.set(SetClass::Preopen, a.subset_of(ica));
        f.set(SetClass::Preclosed, cia.subset_of(a));
        f.set(SetClass::BetaOpen, a.subset_of(cl(ica)));
        f.set(SetClass::BetaClosed, in(cia).subset_of(a));
        f.set(SetClass::IcSet, (a & cia).subset_of(ia));
    }

    constexpr std::array<std::pair<SetClass, SetClass>, 4> kPartners = {{
        {SetClass::LocallyClosed, SetClass::Closed},
        {SetClass::ASet, SetClass::RegularClosed},
        {SetClass::BSet, SetClass::SemiClosed},
        {SetClass::ABSet, SetClass::SemiRegular},
    }};
    for (const auto& [target, partner] : kPartners) {
        const auto family = members(partner);
        for (const auto u : topology_.opens())
            for (const auto v : family) flags_[(u & v).bits()].add(target);
    }
}

SubsetMask ClassTable::semi_closure(SubsetMask a) const {
    index(a);
    auto acc = topology_.ground_set();
    for_each_superset(a, [&](SubsetMask v) {
        if (flags_[v.bits()].has(SetClass::SemiClosed)) acc &= v;
        return true;
    });
    return acc;
}

std::vector<SubsetMask> ClassTable::members(SetClass c) const {
    std::vector<SubsetMask> out;
    for (std::size_t i = 0; i < flags_.size(); ++i)
        if (flags_[i].has(c)) out.push_back(SubsetMask::raw(i, size()));
    return out;
}

}  // namespace fintop
