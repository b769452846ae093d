#include "deform/units.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "deform/errors.hpp"

namespace deform {

double per_hartree(EnergyUnit unit, const PhysConstants& c) noexcept {
  switch (unit) {
    case EnergyUnit::Hartree:
      return 1.0;
    case EnergyUnit::MHz:
      return c.hartree_MHz;
    case EnergyUnit::eV:
      return c.hartree_eV;
    case EnergyUnit::E0Relative:
      return 2.0;
  }
  return 1.0;
}

EnergyValue convert(EnergyValue x, EnergyUnit target, const PhysConstants& c) {
  if (!std::isfinite(x.magnitude)) throw OutOfDomain("cannot convert a non-finite energy");
  if (x.unit == target) return x;
  // Route through Hartree; a single multiply/divide pair keeps round trips at 1 ulp.
  const double in_hartree = x.magnitude / per_hartree(x.unit, c);
  return {in_hartree * per_hartree(target, c), target};
}

std::string_view to_string(EnergyUnit unit) noexcept {
  switch (unit) {
    case EnergyUnit::Hartree:
      return "hartree";
    case EnergyUnit::MHz:
      return "MHz";
    case EnergyUnit::eV:
      return "eV";
    case EnergyUnit::E0Relative:
      return "E0";
  }
  return "hartree";
}

EnergyUnit parse_unit(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "hartree" || s == "au" || s == "a.u.") return EnergyUnit::Hartree;
  if (s == "mhz") return EnergyUnit::MHz;
  if (s == "ev") return EnergyUnit::eV;
  if (s == "e0" || s == "e0relative") return EnergyUnit::E0Relative;
  throw OutOfDomain("unknown energy unit '" + std::string(name) + "'");
}

}  // namespace deform
