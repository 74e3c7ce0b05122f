#include <doctest.h>

#include <map>

#include "fintop/enumerate.hpp"
#include "fintop/theorems.hpp"
#include "support/oracle.hpp"
#include "support/spaces.hpp"

using fintop::PropositionKind;
using fintop::SetClass;
using fintop::SweepConfig;
using fintop::Verdict;

namespace {

// Every claim the engine is expected to check, with its kind.
const std::vector<std::pair<std::string, PropositionKind>> kManifest = {
    {"chain-a-ab", PropositionKind::ImplicationPerSet},
    {"chain-ab-b", PropositionKind::ImplicationPerSet},
    {"chain-ab-semiopen", PropositionKind::ImplicationPerSet},
    {"chain-a-lc", PropositionKind::ImplicationPerSet},
    {"chain-lc-b", PropositionKind::ImplicationPerSet},
    {"chain-open-semiopen-beta", PropositionKind::ImplicationPerSet},
    {"chain-open-preopen-beta", PropositionKind::ImplicationPerSet},
    {"eq-semiclosed-tset", PropositionKind::EquivalencePerSet},
    {"eq-semiregular-dmn", PropositionKind::EquivalencePerSet},
    {"eq-bset-yalvac", PropositionKind::EquivalencePerSet},
    {"eq-scl-closed-form", PropositionKind::EquivalencePerSet},
    {"eq-icset-subspace", PropositionKind::EquivalencePerSet},
    {"l00", PropositionKind::ImplicationPerSet},
    {"t00", PropositionKind::EquivalencePerSet},
    {"t0", PropositionKind::EquivalencePerSet},
    {"t0a", PropositionKind::EquivalencePerSet},
    {"cor-submax", PropositionKind::EquivalencePerSpace},
    {"t1", PropositionKind::EquivalencePerSpace},
    {"t2", PropositionKind::EquivalencePerSpace},
    {"t3", PropositionKind::EquivalencePerSpace},
    {"t4", PropositionKind::EquivalencePerSpace},
    {"t5", PropositionKind::EquivalencePerSpace},
    {"t6", PropositionKind::EquivalencePerSpace},
    {"t7", PropositionKind::EquivalencePerSpace},
    {"nonrev-ab-a", PropositionKind::ExistenceOfWitness},
    {"nonrev-ab-b", PropositionKind::ExistenceOfWitness},
    {"nonrev-ab-semiopen", PropositionKind::ExistenceOfWitness},
    {"indep-ab-lc", PropositionKind::ExistenceOfWitness},
    {"indep-lc-ab", PropositionKind::ExistenceOfWitness},
    {"s41-i", PropositionKind::ImplicationPerMap},
    {"s41-ii", PropositionKind::ImplicationPerMap},
    {"s41-iii", PropositionKind::ImplicationPerMap},
    {"s41-iv", PropositionKind::ImplicationPerMap},
    {"s42", PropositionKind::EquivalencePerMap},
    {"s42a", PropositionKind::EquivalencePerMap},
    {"s43", PropositionKind::EquivalencePerMap},
    {"nonrev-s41-i", PropositionKind::ExistenceOfWitness},
    {"nonrev-s41-ii", PropositionKind::ExistenceOfWitness},
    {"nonrev-s41-iii", PropositionKind::ExistenceOfWitness},
    {"nonrev-s41-iv", PropositionKind::ExistenceOfWitness},
    {"si-forms", PropositionKind::EquivalencePerMap},
};

const fintop::Proposition& lookup(std::string_view id) {
    for (const auto& p : fintop::registry())
        if (p.id == id) return p;
    throw std::out_of_range(std::string(id));
}

std::size_t position_of(const fintop::Topology& t) {
    const auto all = fintop::all_topologies_up_to(t.size());
    return static_cast<std::size_t>(std::find(all.begin(), all.end(), t) - all.begin());
}

}  // namespace

TEST_CASE("the registry matches the manifest exactly") {
    const auto& reg = fintop::registry();
    REQUIRE(reg.size() == kManifest.size());
    CHECK(reg.size() >= 24);
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(reg[i].id == kManifest[i].first);
        CHECK(reg[i].kind == kManifest[i].second);
    }
    std::map<std::string, int> seen;
    for (const auto& p : reg) CHECK(++seen[p.id] == 1);
    CHECK(lookup("si-forms").exploratory);
    CHECK(fintop::name(lookup("t4").kind) == "equivalence-per-space");
    CHECK(fintop::name(lookup("nonrev-ab-b").kind) == "existence-of-witness");
}

TEST_CASE("small sweeps") {
    SweepConfig three;
    three.budget.max_n = 3;
    const auto t1 = fintop::verify(lookup("t1"), three);
    CHECK(t1.verdict == Verdict::HoldsExhaustively);
    CHECK(t1.spaces_checked == 1 + 1 + 4 + 29);

    SweepConfig two;
    two.budget.max_n = 2;
    CHECK(fintop::verify(lookup("t4"), two).verdict == Verdict::HoldsExhaustively);
    CHECK(fintop::verify(lookup("t5"), two).confirmed());
}

TEST_CASE("AB-set that is not an A-set: e1a or an earlier space") {
    const auto r = fintop::verify(lookup("nonrev-ab-a"));
    REQUIRE(r.verdict == Verdict::WitnessFound);
    const auto& w = r.witnesses.front();
    REQUIRE(w.subset);
    CHECK(w.space.size() <= 4);
    if (w.space.size() == 4) CHECK(position_of(w.space) <= position_of(spaces::e1a()));
    CHECK(oracle::ab_set(w.space, w.subset->bits()));
    CHECK_FALSE(oracle::a_set(w.space, w.subset->bits()));
}

TEST_CASE("find_counterexample") {
    SUBCASE("B-set not AB-set") {
        const auto w = fintop::find_counterexample(SetClass::BSet, SetClass::ABSet);
        REQUIRE(w);
        CHECK(w->space.size() <= 3);
        if (w->space.size() == 3) CHECK(position_of(w->space) <= position_of(spaces::e1b()));
        CHECK(oracle::b_set(w->space, w->subset->bits()));
        CHECK_FALSE(oracle::ab_set(w->space, w->subset->bits()));
    }
    SUBCASE("AB-set not A-set") {
        const auto w = fintop::find_counterexample(SetClass::ABSet, SetClass::ASet);
        REQUIRE(w);
        CHECK(w->space.size() == 4);
        CHECK(position_of(w->space) <= position_of(spaces::e1a()));
    }
    SUBCASE("semi-open not AB-set") {
        const auto w = fintop::find_counterexample(SetClass::SemiOpen, SetClass::ABSet);
        REQUIRE(w);
        CHECK(w->space.size() <= 3);
        CHECK(oracle::semi_open(w->space, w->subset->bits()));
        CHECK_FALSE(oracle::ab_set(w->space, w->subset->bits()));
    }
    SUBCASE("true implications have no counterexample") {
        CHECK_FALSE(fintop::find_counterexample(SetClass::ASet, SetClass::ABSet));
        CHECK_FALSE(fintop::find_counterexample(SetClass::Open, SetClass::BetaOpen));
    }
}

TEST_CASE("resolving ad-hoc implications") {
    const auto p = fintop::resolve_proposition("implication:SemiOpen=>Open");
    REQUIRE(p);
    const auto r = fintop::verify(*p);
    CHECK(r.verdict == Verdict::WitnessFound);
    CHECK_FALSE(r.confirmed());
    CHECK(fintop::replay(r.witnesses.front()));
    CHECK_FALSE(fintop::resolve_proposition("implication:SemiOpen=>Nope"));
    CHECK_FALSE(fintop::resolve_proposition("no-such-claim"));
}

TEST_CASE("every registered proposition is confirmed at the default bounds and witnesses replay") {
    for (const auto& p : fintop::registry()) {
        INFO(p.id);
        const auto r = fintop::verify(p);
        CHECK(r.confirmed());
        if (!p.existential()) CHECK(r.verdict == Verdict::HoldsExhaustively);
        for (const auto& w : r.witnesses) {
            CHECK(fintop::replay(w));
            const auto text = fintop::witness_to_json(w);
            const auto back = fintop::witness_from_json(text);
            CHECK(fintop::witness_to_json(back) == text);
            CHECK(fintop::replay(back));
        }
    }
}

TEST_CASE("map non-reversibility witnesses keep the codomain small") {
    const auto r = fintop::verify(lookup("nonrev-s41-i"));
    REQUIRE(r.verdict == Verdict::WitnessFound);
    const auto& w = r.witnesses.front();
    REQUIRE(w.codomain);
    CHECK(w.codomain->size() <= 3);
    CHECK(w.space.size() == 4);
    REQUIRE(r.codomain_n_max);
    CHECK(*r.codomain_n_max == 3);
}

TEST_CASE("with both sides capped at three points the AB-but-not-A map witness does not exist") {
    SweepConfig three;
    three.budget.max_n = 3;
    three.max_map_n = 3;
    const auto r = fintop::verify(lookup("nonrev-s41-i"), three);
    CHECK(r.verdict == Verdict::HoldsExhaustively);
    CHECK_FALSE(r.confirmed());
    // The underlying reason: no AB-set fails to be an A-set on three points or fewer.
    for (const auto& t : fintop::all_topologies_up_to(3))
        for (fintop::Word a = 0; a <= oracle::full(t); ++a)
            CHECK_FALSE((oracle::ab_set(t, a) && !oracle::a_set(t, a)));
}

TEST_CASE("tampered witnesses do not replay") {
    auto r = fintop::verify(lookup("nonrev-ab-b"));
    REQUIRE(r.verdict == Verdict::WitnessFound);
    auto w = r.witnesses.front();
    w.subset = w.space.ground_set();
    CHECK_FALSE(fintop::replay(w));
    w = r.witnesses.front();
    w.polarity = fintop::Polarity::CounterexampleToUniversal;
    CHECK_FALSE(fintop::replay(w));
    CHECK_THROWS(fintop::witness_from_json("{\"proposition\": 3}"));
}

TEST_CASE("budget exhaustion is a verdict, not an exception") {
    SweepConfig tiny;
    tiny.budget.max_spaces = 5;
    const auto r = fintop::verify(lookup("t1"), tiny);
    CHECK(r.verdict == Verdict::BudgetExhausted);
    CHECK_FALSE(r.confirmed());

    SweepConfig few_maps;
    few_maps.budget.max_maps = 10;
    CHECK(fintop::verify(lookup("s42"), few_maps).verdict == Verdict::BudgetExhausted);

    SweepConfig huge;
    huge.budget.max_n = 30;
    CHECK(fintop::verify(lookup("t1"), huge).verdict == Verdict::BudgetExhausted);
    huge.budget.max_n = 7;
    huge.budget.max_spaces = 1000;
    CHECK(fintop::verify(lookup("t1"), huge).verdict == Verdict::BudgetExhausted);
    huge.max_map_n = 7;
    CHECK(fintop::verify(lookup("s42"), huge).verdict == Verdict::BudgetExhausted);
}

TEST_CASE("parallel sweeps produce byte-identical reports") {
    SweepConfig seq;
    std::vector<fintop::SweepReport> a, b, c;
    for (const auto& p : fintop::registry()) a.push_back(fintop::verify(p, seq));
    SweepConfig par = seq;
    par.parallel = true;
    par.workers = 4;
    for (const auto& p : fintop::registry()) b.push_back(fintop::verify(p, par));
    for (const auto& p : fintop::registry()) c.push_back(fintop::verify(p, seq));
    const auto text = fintop::reports_to_json(a, seq);
    CHECK(text == fintop::reports_to_json(b, par));
    CHECK(text == fintop::reports_to_json(c, seq));
    CHECK(text.find("\"format\": \"fintop-sweep-report/1\"") != std::string::npos);
}
