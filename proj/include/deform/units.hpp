#pragma once

#include <string>
#include <string_view>

namespace deform {

// Everything inside the library is in atomic units: hbar = m = e = a = 1,
// lengths in Bohr radii, energies in Hartree.

struct PhysConstants {
  double bohr_radius_m;  // metres
  double hartree_MHz;    // MHz per Hartree
  double hartree_eV;     // eV per Hartree
};

/// CODATA 2018 values.
constexpr PhysConstants constants() noexcept {
  return PhysConstants{5.29177210903e-11, 6.579683920502e9, 27.211386245988};
}

/// e/h in MHz per eV; exact in the 2019 SI.
inline constexpr double kElectronVoltMHz = 1.602176634e-19 / 6.62607015e-34 * 1e-6;

enum class EnergyUnit { Hartree, MHz, eV, E0Relative };

/// Energy tagged with its unit. E0Relative is in units of e^2/2a, i.e. half a Hartree.
struct EnergyValue {
  double magnitude = 0.0;
  EnergyUnit unit = EnergyUnit::Hartree;

  friend bool operator==(const EnergyValue&, const EnergyValue&) = default;
};

/// Number of `unit` per Hartree.
double per_hartree(EnergyUnit unit, const PhysConstants& c = constants()) noexcept;

EnergyValue convert(EnergyValue x, EnergyUnit target, const PhysConstants& c = constants());

inline EnergyValue hartree(double v) { return {v, EnergyUnit::Hartree}; }

std::string_view to_string(EnergyUnit unit) noexcept;

/// Accepts "hartree", "au", "mhz", "ev", "e0" (case-insensitive); throws OutOfDomain otherwise.
EnergyUnit parse_unit(std::string_view name);

}  // namespace deform
