#include <doctest.h>

#include <algorithm>
#include <set>

#include "idpd/idpd.hpp"
#include "oracles.hpp"

using namespace idpd;

namespace {

PrimeSpectrumConfig z6_s123() {
    CyclicDecomposition g(0, {6});
    return PrimeSpectrumConfig(g, {{g.element({1}), 2u}, {g.element({2}), 1u}, {g.element({3}), 2u}},
                               "z6-s123", true);
}

PrimeSpectrumConfig z4xz2_cfg() {
    CyclicDecomposition g(0, {4, 2});
    return PrimeSpectrumConfig(
        g, {{g.element({1, 0}), 1u}, {g.element({0, 1}), 1u}, {g.element({3, 1}), 1u}}, "z4xz2",
        true);
}

DivisorProfile prof(std::initializer_list<ProfileEntry> es) {
    return DivisorProfile::from_entries(std::vector<ProfileEntry>(es));
}

DivisorProfile z6_z() {
    return prof({{{0, 0}, 3}, {{0, 1}, 2}, {{1, 0}, 2}, {{2, 0}, 2}, {{2, 1}, 1}});
}
DivisorProfile z6_pi() { return prof({{{0, 0}, 1}, {{0, 1}, 2}, {{2, 0}, 1}}); }
DivisorProfile z6_tau() { return prof({{{0, 0}, 3}, {{2, 1}, 1}}); }

} // namespace

TEST_CASE("pair_witness: elementary 2-group example with four primes") {
    CyclicDecomposition z2(0, {2});
    PrimeSpectrumConfig cfg(z2, {{z2.element({1}), 4u}}, "", true);
    DivisorProfile z = prof({{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}});
    DivisorProfile p = prof({{{0, 0}, 1}, {{0, 1}, 1}});
    DivisorProfile q = prof({{{0, 0}, 1}, {{0, 2}, 1}});
    auto w = pair_witness(cfg, z, p, q);
    REQUIRE(w.has_value());
    CHECK(w->first == prof({{{0, 2}, 1}, {{0, 3}, 1}}));  // p' = p3 p4
    CHECK(w->second == prof({{{0, 1}, 1}, {{0, 3}, 1}})); // q' = p2 p4
    CHECK(verify_pair(cfg, z, p, q, w->first, w->second));
    // exhaustive confirmation against the naive oracle
    CHECK(testing::naive_pair_witness_exists(cfg, z, p, q));
}

TEST_CASE("pair_witness: the order-6 counterexample pair has no witness") {
    auto cfg = z6_s123();
    CHECK_FALSE(pair_witness(cfg, z6_z(), z6_pi(), z6_tau()).has_value());
    CHECK_FALSE(testing::naive_pair_witness_exists(cfg, z6_z(), z6_pi(), z6_tau()));
    // and symmetrically
    CHECK_FALSE(pair_witness(cfg, z6_z(), z6_tau(), z6_pi()).has_value());
}

TEST_CASE("pair_witness: prime elements behave like the UFD example") {
    CyclicDecomposition z2(0, {2});
    PrimeSpectrumConfig cfg(z2, {{z2.zero(), 2u}}, "", false);
    DivisorProfile z = prof({{{0, 0}, 1}, {{0, 1}, 1}});
    DivisorProfile p = prof({{{0, 0}, 1}});
    DivisorProfile q = prof({{{0, 1}, 1}});
    auto w = pair_witness(cfg, z, p, q);
    REQUIRE(w.has_value());
    CHECK(w->first == q);  // p' = q
    CHECK(w->second == p); // q' = p
    CHECK(verify_pair(cfg, z, p, q, w->first, w->second));
}

TEST_CASE("pair_witness precondition violations") {
    auto cfg = z6_s123();
    CHECK_THROWS_AS(pair_witness(cfg, prof({{{0, 0}, 1}}), z6_pi(), z6_tau()), usage_error);
    CHECK_THROWS_AS(pair_witness(cfg, z6_z(), z6_pi(), z6_pi()), usage_error);
    CHECK_THROWS_AS(pair_witness(cfg, z6_z(), z6_z(), z6_tau()), usage_error);
}

TEST_CASE("verify_pair rejects broken witnesses") {
    CyclicDecomposition z2(0, {2});
    PrimeSpectrumConfig cfg(z2, {{z2.element({1}), 4u}}, "", true);
    DivisorProfile z = prof({{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}});
    DivisorProfile p = prof({{{0, 0}, 1}, {{0, 1}, 1}});
    DivisorProfile q = prof({{{0, 0}, 1}, {{0, 2}, 1}});
    DivisorProfile good_p = prof({{{0, 2}, 1}, {{0, 3}, 1}});
    DivisorProfile good_q = prof({{{0, 1}, 1}, {{0, 3}, 1}});
    CHECK(verify_pair(cfg, z, p, q, good_p, good_q));
    CHECK_FALSE(verify_pair(cfg, z, p, p, good_p, good_q));         // p = q
    CHECK_FALSE(verify_pair(cfg, z, p, q, good_q, good_q));         // pp' != qq'
    CHECK_FALSE(verify_pair(cfg, z, p, q, p, good_q));              // not associated
}

TEST_CASE("check_element") {
    auto cfg = z6_s123();
    // an atom passes vacuously
    CHECK_FALSE(check_element(cfg, z6_pi()).has_value());
    // the big order-6 element fails, and the reported pair re-fails under pair_witness
    auto bad = check_element(cfg, z6_z());
    REQUIRE(bad.has_value());
    CHECK_FALSE(pair_witness(cfg, z6_z(), bad->first, bad->second).has_value());

    // every element of the two-class elementary 2-group model passes
    // (multiplicity <= 8); that config is an HFD, so every element passes
    CyclicDecomposition z2sq(0, {2, 2});
    PrimeSpectrumConfig e2(z2sq, {{z2sq.element({1, 0}), 2u}, {z2sq.element({0, 1}), 2u}}, "", true);
    SearchBounds b;
    b.max_total_multiplicity = 8;
    b.prime_cap = 2;
    b.max_support = 8;
    for (const auto& z : enumerate_principal_profiles(e2, b)) {
        CHECK_FALSE(check_element(e2, z).has_value());
    }
}

TEST_CASE("canonical profile enumeration") {
    auto cfg = z6_s123();
    SearchBounds b;
    b.max_total_multiplicity = 6;
    b.prime_cap = 2;
    b.max_support = 8;
    auto zs = enumerate_principal_profiles(cfg, b);
    CHECK(std::is_sorted(zs.begin(), zs.end(), profile_size_less));
    for (const auto& z : zs) {
        CHECK(is_principal(cfg, z));
        CHECK_FALSE(z.empty());
        CHECK(z.total_multiplicity() <= 6);
        // canonical within slots: increasing ordinals, non-increasing exponents
        for (std::size_t i = 1; i < z.entries().size(); ++i) {
            const auto& prev = z.entries()[i - 1];
            const auto& cur = z.entries()[i];
            if (prev.prime.slot == cur.prime.slot) {
                CHECK(cur.prime.ordinal == prev.prime.ordinal + 1);
                CHECK(cur.exp <= prev.exp);
            }
        }
    }
    // no duplicates
    auto sorted = zs;
    std::sort(sorted.begin(), sorted.end(), profile_less);
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("search finds the order-6 counterexample and a verifiable witness") {
    auto cfg = z6_s123();
    SearchBounds b;
    b.max_total_multiplicity = 10;
    b.prime_cap = 2;
    b.max_support = 5;
    Verdict v = search_counterexample(cfg, b);
    REQUIRE(v.status == VerdictStatus::CounterexampleFound);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.bounds == b);
    const auto& ce = *v.counterexample;
    CHECK(is_principal(cfg, ce.z));
    CHECK(is_atom(cfg, ce.p));
    CHECK(is_atom(cfg, ce.q));
    CHECK(divides(cfg, ce.p, ce.z));
    CHECK(divides(cfg, ce.q, ce.z));
    CHECK_FALSE(pair_witness(cfg, ce.z, ce.p, ce.q).has_value());
    // exhaustive oracle re-check of the witness
    CHECK_FALSE(testing::naive_pair_witness_exists(cfg, ce.z, ce.p, ce.q));
    // minimality: no counterexample strictly below the witness multiplicity
    SearchBounds smaller = b;
    smaller.max_total_multiplicity = ce.z.total_multiplicity() - 1;
    CHECK(search_counterexample(cfg, smaller).status == VerdictStatus::NoCounterexampleWithinBounds);
}

TEST_CASE("search is deterministic across thread counts") {
    auto cfg = z6_s123();
    SearchBounds b;
    b.max_total_multiplicity = 10;
    b.prime_cap = 2;
    b.max_support = 5;
    Verdict v1 = search_counterexample(cfg, b, 1);
    Verdict v2 = search_counterexample(cfg, b, 2);
    Verdict v4 = search_counterexample(cfg, b, 4);
    REQUIRE(v1.counterexample.has_value());
    REQUIRE(v2.counterexample.has_value());
    REQUIRE(v4.counterexample.has_value());
    CHECK(v1.counterexample->z == v2.counterexample->z);
    CHECK(v1.counterexample->z == v4.counterexample->z);
    CHECK(v1.counterexample->p == v2.counterexample->p);
    CHECK(v1.counterexample->q == v4.counterexample->q);
}

TEST_CASE("the Z_4 x Z_2 configuration fails as well") {
    auto cfg = z4xz2_cfg();
    // the explicit triple: z = p^4 q^2 r^4, pi = pqr, tau = r^4
    DivisorProfile z = prof({{{0, 0}, 4}, {{1, 0}, 2}, {{2, 0}, 4}});
    DivisorProfile pi = prof({{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 1}});
    DivisorProfile tau = prof({{{2, 0}, 4}});
    REQUIRE(is_principal(cfg, z));
    REQUIRE(is_atom(cfg, pi));
    REQUIRE(is_atom(cfg, tau));
    CHECK_FALSE(pair_witness(cfg, z, pi, tau).has_value());

    SearchBounds b;
    b.max_total_multiplicity = 12;
    b.prime_cap = 2;
    b.max_support = 8;
    Verdict v = search_counterexample(cfg, b);
    CHECK(v.status == VerdictStatus::CounterexampleFound);
}

TEST_CASE("configs with totally ordered class data pass the bounded search") {
    CyclicDecomposition g(0, {6});
    PrimeSpectrumConfig cfg(g, {{g.element({1}), std::nullopt}, {g.element({2}), std::nullopt}}, "", false);
    SearchBounds b;
    b.max_total_multiplicity = 12;
    b.prime_cap = 2;
    b.max_support = 8;
    Verdict v = search_counterexample(cfg, b);
    CHECK(v.status == VerdictStatus::NoCounterexampleWithinBounds);
    REQUIRE(v.sample.has_value());
    CHECK(verify_pair(cfg, v.sample->z, v.sample->p, v.sample->q, v.sample->p_prime, v.sample->q_prime));
}

TEST_CASE("class-0 slots never change the verdict (localization invariance)") {
    std::vector<std::vector<std::int64_t>> orders_list = {{2}, {3}, {4}, {5}, {6}, {2, 2}};
    int config_count = 0;
    for (const auto& orders : orders_list) {
        CyclicDecomposition g(0, orders);
        std::uint64_t n = g.element_count();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)) && config_count < 60; ++mask) {
            std::vector<SlotSpec> slots;
            for (std::uint64_t i = 1; i < n; ++i) {
                if (mask & (std::uint64_t{1} << (i - 1))) slots.push_back({g.element_at(i), 2u});
            }
            PrimeSpectrumConfig plain(g, slots, "", false);
            auto with_zero_slots = slots;
            with_zero_slots.push_back({g.zero(), 3u});
            PrimeSpectrumConfig augmented(g, with_zero_slots, "", false);

            SearchBounds b;
            b.max_total_multiplicity = 8;
            b.prime_cap = 2;
            b.max_support = 6;
            Verdict v1 = search_counterexample(plain, b);
            Verdict v2 = search_counterexample(augmented, b);
            CHECK(v1.status == v2.status);
            if (v1.counterexample) {
                REQUIRE(v2.counterexample.has_value());
                // class-0 slot appended last: indices of the others are stable
                CHECK(v1.counterexample->z == v2.counterexample->z);
                CHECK(v1.counterexample->p == v2.counterexample->p);
                CHECK(v1.counterexample->q == v2.counterexample->q);
            }
            ++config_count;
        }
    }
    CHECK(config_count >= 50);
}

TEST_CASE("verdicts are invariant under slot permutation") {
    CyclicDecomposition g(0, {6});
    std::vector<SlotSpec> slots = {{g.element({1}), 2u}, {g.element({2}), 1u}, {g.element({3}), 2u}};
    SearchBounds b;
    b.max_total_multiplicity = 10;
    b.prime_cap = 2;
    b.max_support = 5;
    Verdict base = search_counterexample(PrimeSpectrumConfig(g, slots, "", true), b);
    std::vector<SlotSpec> perm = {slots[2], slots[0], slots[1]};
    Verdict permuted = search_counterexample(PrimeSpectrumConfig(g, perm, "", true), b);
    CHECK(base.status == permuted.status);

    // ordinal permutation of a witness preserves failure
    auto cfg = z6_s123();
    DivisorProfile z_swapped =
        prof({{{0, 0}, 2}, {{0, 1}, 3}, {{1, 0}, 2}, {{2, 0}, 1}, {{2, 1}, 2}});
    DivisorProfile pi_swapped = prof({{{0, 0}, 2}, {{0, 1}, 1}, {{2, 1}, 1}});
    DivisorProfile tau_swapped = prof({{{0, 1}, 3}, {{2, 0}, 1}});
    CHECK_FALSE(pair_witness(cfg, z_swapped, pi_swapped, tau_swapped).has_value());
}

TEST_CASE("empty after stripping is trivially clean") {
    CyclicDecomposition z2(0, {2});
    PrimeSpectrumConfig cfg(z2, {{z2.zero(), 5u}}, "", false);
    SearchBounds b;
    Verdict v = search_counterexample(cfg, b);
    CHECK(v.status == VerdictStatus::NoCounterexampleWithinBounds);
}

TEST_CASE("pair_witness presence agrees with the naive oracle everywhere (mult <= 6)") {
    std::vector<PrimeSpectrumConfig> cfgs;
    cfgs.push_back(z6_s123());
    cfgs.push_back(z4xz2_cfg());
    {
        CyclicDecomposition z2sq(0, {2, 2});
        cfgs.push_back(PrimeSpectrumConfig(
            z2sq, {{z2sq.element({1, 0}), 2u}, {z2sq.element({0, 1}), 2u}}, "", true));
    }
    SearchBounds b;
    b.max_total_multiplicity = 6;
    b.prime_cap = 2;
    b.max_support = 6;
    int pairs_checked = 0;
    for (const auto& cfg : cfgs) {
        for (const auto& z : enumerate_principal_profiles(cfg, b)) {
            auto atoms = atoms_dividing(cfg, z);
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                for (std::size_t j = i + 1; j < atoms.size(); ++j) {
                    bool engine = pair_witness(cfg, z, atoms[i], atoms[j]).has_value();
                    bool naive = testing::naive_pair_witness_exists(cfg, z, atoms[i], atoms[j]);
                    CHECK(engine == naive);
                    ++pairs_checked;
                }
            }
        }
    }
    CHECK(pairs_checked > 30);
}
