#pragma once

#include <stdexcept>
#include <string>

namespace radbound {

enum class UnitMode { dimensionless, physical };

/// Conversion between the dimensionless solver form (hbar^2/(2 mu) = 1)
/// and physical energies. `kinetic_scale` is hbar^2/(2 mu) in
/// energy_unit * length_unit^2.
struct UnitContext {
    UnitMode mode = UnitMode::dimensionless;
    double kinetic_scale = 1.0;
    std::string energy_unit = "1";
    std::string length_unit = "1";

    static UnitContext dimensionless() { return {}; }

    static UnitContext physical(double kinetic_scale, std::string energy_unit,
                                std::string length_unit)
    {
        if (!(kinetic_scale > 0.0)) {
            throw std::invalid_argument("kinetic scale must be positive");
        }
        return {UnitMode::physical, kinetic_scale, std::move(energy_unit),
                std::move(length_unit)};
    }
};

namespace constants {

// hbar^2 / (2 m_N) in MeV fm^2, with hbar c = 197.327 MeV fm and the
// average nucleon mass 938.92 MeV.
inline constexpr double hbar2_over_2mN_MeV_fm2 = 20.7355;

// hbar^2 / m(4He) in micro-eV Angstrom^2 (m c^2 = 3727.379 MeV). For the
// 4He-4He pair mu = m/2, so this is also hbar^2/(2 mu).
inline constexpr double hbar2_over_mHe4_ueV_A2 = 1044.7;

// Wood-Saxon geometry for nucleon-nucleus systems.
inline constexpr double ws_radius_parameter_fm = 1.27;
inline constexpr double ws_diffuseness_fm = 0.67;
// Rounded alpha = R/a per unit A^{1/3} used by the WKB and threshold formulas.
inline constexpr double ws_alpha_per_cbrtA = 1.9;

// Hard-core radius used for the helium dimer estimate, in Angstrom.
inline constexpr double helium_core_radius_A = 2.640;

}  // namespace constants

/// Units of a nucleon bound to a core of mass number A (MeV, fm), with the
/// reduced-mass factor (A+1)/A.
inline UnitContext nuclear_units(double mass_number)
{
    if (!(mass_number >= 1.0)) {
        throw std::invalid_argument("mass number must be >= 1");
    }
    return UnitContext::physical(
        constants::hbar2_over_2mN_MeV_fm2 * (mass_number + 1.0) / mass_number, "MeV",
        "fm");
}

/// Units of the 4He-4He pair (micro-eV, Angstrom).
inline UnitContext helium_dimer_units()
{
    return UnitContext::physical(constants::hbar2_over_mHe4_ueV_A2, "ueV", "A");
}

}  // namespace radbound
