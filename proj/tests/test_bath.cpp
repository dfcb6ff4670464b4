#include <doctest.h>

#include <cmath>

#include "otto/bath.hpp"
#include "otto/dynamics.hpp"
#include "otto/errors.hpp"

using namespace otto;

TEST_CASE("thermal atoms give the expected transition weights") {
    // Incoherent ground space: effective temperature equals the atomic one.
    const double beta = std::log(1.5);
    const AtomBath b = bath_from_spec({beta, 1.0, 2, 0.5});
    CHECK(b.E == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(b.G == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(nbar_ss(b) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(effective_beta(b, 1.0) == doctest::Approx(beta).epsilon(1e-14));
}

TEST_CASE("excited population at infinite temperature is 1/(ell+1)") {
    CHECK(excited_population(0.0, 1.0, 2) == doctest::Approx(1.0 / 3.0));
    CHECK(excited_population(0.0, 1.0, 4) == doctest::Approx(0.2));
}

TEST_CASE("non-thermalizing and malformed baths are rejected") {
    CHECK_THROWS_AS(make_bath(0.4, 0.4), NonThermalizing);
    CHECK_THROWS_AS(make_bath(0.5, 0.3), NonThermalizing);
    CHECK_THROWS_AS(make_bath(-0.1, 0.3), OttoError);
    CHECK_THROWS_AS(make_bath(0.1, 0.3, 0), OttoError);
    CHECK_NOTHROW(make_bath(0.0, 0.3));
}

TEST_CASE("pairs share effective temperatures") {
    const double bh = temperature_from_nbar(2.0, 1.0);
    const double bc = temperature_from_nbar(0.55, 1.0);
    const BathPair i = make_pair(PairKind::I, bh, bc, 1.0);
    const BathPair ch = make_pair(PairKind::CH, bh, bc, 1.0);
    const BathPair cc = make_pair(PairKind::CC, bh, bc, 1.0);
    for (const BathPair* p : {&i, &ch, &cc}) {
        CHECK(nbar_ss(p->hot) == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(nbar_ss(p->cold) == doctest::Approx(0.55).epsilon(1e-13));
    }
    // CH slows the hot bath, CC speeds up the cold one.
    CHECK(ch.hot.delta() < i.hot.delta());
    CHECK(cc.cold.delta() > i.cold.delta());
    CHECK(ch.cold.delta() == doctest::Approx(i.cold.delta()).epsilon(1e-14));
    CHECK(cc.hot.delta() == doctest::Approx(i.hot.delta()).epsilon(1e-14));
    REQUIRE(cc.cold.provenance);
    CHECK(cc.cold.provenance->coherence_g > 0.5);
    CHECK(cc.cold.provenance->coherence_g <= 1.0);
}

TEST_CASE("default preset weights") {
    const BathPair i = make_pair(PairKind::I, temperature_from_nbar(2.0, 1.0), temperature_from_nbar(0.55, 1.0), 1.0);
    CHECK(i.hot.E == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(i.hot.delta() == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(i.cold.E == doctest::Approx(11.0 / 73.0).epsilon(1e-14));
    CHECK(i.cold.delta() == doctest::Approx(20.0 / 73.0).epsilon(1e-14));
}

TEST_CASE("cold coherent bath beyond the cooling limit is infeasible") {
    // A very hot atom stream cannot cool to a very low effective temperature.
    CHECK_THROWS_AS(make_pair(PairKind::CC, 1e-3, 10.0, 1.0), Infeasible);
}

TEST_CASE("pi family hits CH and CC exactly") {
    const BathPair i = make_pair(PairKind::I, 0.4, 0.9, 1.0);
    const BathPair p0 = make_pair_pi(0.0, i);
    const BathPair p1 = make_pair_pi(1.0, i);
    const BathPair ch = make_pair(PairKind::CH, 0.4, 0.9, 1.0);
    const BathPair cc = make_pair(PairKind::CC, 0.4, 0.9, 1.0);
    CHECK(p0.hot.E == ch.hot.E);
    CHECK(p0.hot.G == ch.hot.G);
    CHECK(p1.cold.E == cc.cold.E);
    CHECK(p1.cold.G == cc.cold.G);
    CHECK_THROWS_AS(make_pair_pi(1.5, i), DomainError);
    CHECK_THROWS_AS(make_pair_pi(0.5, cc), DomainError);
}

TEST_CASE("pair kinds round-trip through text") {
    for (PairKind k : {PairKind::I, PairKind::CH, PairKind::CC}) {
        CHECK(parse_pair_kind(to_string(k)) == k);
    }
    CHECK_THROWS(parse_pair_kind("XY"));
}
