#include "equifreq/errors.hpp"
#include "equifreq/physics.hpp"

#include <doctest.h>

using namespace equifreq;

TEST_CASE("observables of the red Balmer line") {
    const PhotonObservables obs = photon_observables(Transition(3, 2), {});
    CHECK(obs.delta == Rational(5, 36));
    CHECK(obs.wavelength_m == doctest::Approx(6.5647e-7).epsilon(1e-4));
    CHECK(obs.frequency_hz == doctest::Approx(4.5666e14).epsilon(1e-4));
    CHECK(obs.wavelength_m * obs.frequency_hz == doctest::Approx(kSpeedOfLight).epsilon(1e-12));
}

TEST_CASE("observables of the Lyman alpha line") {
    const PhotonObservables obs = photon_observables(Transition(2, 1), {});
    CHECK(obs.delta == Rational(3, 4));
    CHECK(obs.wavelength_m == doctest::Approx(1.2157e-7).epsilon(1e-4));
}

TEST_CASE("equal deltas give bit-identical observables") {
    const PhotonObservables a = photon_observables(Transition(7, 5), {});
    const PhotonObservables b = photon_observables(Transition(35, 7), {});
    CHECK(a.delta == b.delta);
    CHECK(a.wavelength_m == b.wavelength_m);  // exact, not approximate
    CHECK(a.frequency_hz == b.frequency_hz);
}

TEST_CASE("a custom Rydberg constant scales both observables") {
    const PhotonObservables ref = photon_observables(Transition(3, 2), {});
    const PhotonObservables dbl =
        photon_observables(Transition(3, 2), PhysicalConstants{2 * kRydbergHydrogen});
    CHECK(dbl.wavelength_m == doctest::Approx(ref.wavelength_m / 2).epsilon(1e-12));
    CHECK(dbl.frequency_hz == doctest::Approx(ref.frequency_hz * 2).epsilon(1e-12));

    CHECK_THROWS_AS(photon_observables(Transition(3, 2), PhysicalConstants{0.0}), Error);
    CHECK_THROWS_AS(photon_observables(Transition(3, 2), PhysicalConstants{-1.0}), Error);
}
