#pragma once

#include "equifreq/numeric.hpp"
#include "equifreq/transitions.hpp"

namespace equifreq {

// Speed of light in vacuum, m/s (exact by definition).
inline constexpr double kSpeedOfLight = 299792458.0;

// Rydberg constant for hydrogen, per meter.
inline constexpr double kRydbergHydrogen = 1.0967758e7;

struct PhysicalConstants {
    double rydberg_wavenumber = kRydbergHydrogen;  // must be strictly positive
};

// Observable photon properties of a transition. The energy difference stays
// an exact rational; decimals appear only here, at the presentation boundary.
struct PhotonObservables {
    Rational delta;        // 1/n^2 - 1/N^2, exact
    double wavelength_m;   // 1 / (R * delta)
    double frequency_hz;   // c * R * delta
};

// Equal deltas produce bit-identical observables: the rational is converted
// once and both decimals are computed from that one conversion.
PhotonObservables photon_observables(const Transition& t, const PhysicalConstants& constants);

}  // namespace equifreq
