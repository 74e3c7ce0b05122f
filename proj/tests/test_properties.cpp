#include <doctest.h>

#include "support/properties.hpp"

namespace {

void require_clean(const laws::Tally& tally) {
    for (const auto& [law, violations] : tally) {
        INFO(law);
        CHECK(violations == 0);
    }
}

}  // namespace

TEST_CASE("laws hold on every topology up to four points") { require_clean(laws::exhaustive(4)); }

TEST_CASE("laws hold on sampled five-point topologies") { require_clean(laws::sampled(5, 500, 20240611)); }

TEST_CASE("laws hold on sampled larger topologies") {
    require_clean(laws::sampled(7, 100, 99));
    require_clean(laws::sampled(10, 20, 5));
}

TEST_CASE("random topologies are valid and cover varied shapes") {
    std::mt19937_64 rng(1);
    std::set<std::size_t> sizes;
    for (int i = 0; i < 200; ++i) {
        const auto t = oracle::random_topology(5, rng, 0.4);
        CHECK(oracle::is_topology(5, oracle::opens(t)));
        sizes.insert(t.opens().size());
    }
    CHECK(sizes.size() > 5);
}
