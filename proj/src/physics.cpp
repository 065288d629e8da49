#include "equifreq/physics.hpp"

#include "equifreq/errors.hpp"

namespace equifreq {

PhotonObservables photon_observables(const Transition& t, const PhysicalConstants& constants) {
    internal_check(constants.rydberg_wavenumber > 0.0, "Rydberg constant must be positive");
    Rational delta = t.delta();
    // One conversion feeds both decimals, so equal deltas always give
    // bit-identical observables.
    const double d = delta.convert_to<double>();
    const double wavelength = 1.0 / (constants.rydberg_wavenumber * d);
    const double frequency = kSpeedOfLight * constants.rydberg_wavenumber * d;
    return {std::move(delta), wavelength, frequency};
}

}  // namespace equifreq
