#pragma once

namespace madelung {

// Natural units used throughout: hbar = m = 1. Formulas keep the symbols so
// that the dimensional structure stays readable.
struct UnitsConvention {
    static constexpr double hbar = 1.0;
    static constexpr double mass = 1.0;
};

inline constexpr double kHbar = UnitsConvention::hbar;
inline constexpr double kMass = UnitsConvention::mass;

}  // namespace madelung
