#pragma once

// Frozen oracle outputs. test_oracles.cpp recomputes each one.

namespace fixture {

// First amplitude zero at T = 1, U0 = 1 (RK4 step-halving, six digits).
inline constexpr double kHalfLengthT1 = 0.9627446;
inline constexpr double kHalfLengthDigitsTol = 5e-7;

// Entropy of the box density at U_bar0 = 1 (trapezoid, 2^16 + 1 points).
inline constexpr double kBoxEntropy = 0.491303476129;

// Leading error constant of the 3-point second difference applied to sin on
// [-1, 1]: max interior error / h^2 as h -> 0.
inline constexpr double kSinCurvatureConstant = 0.0701226;

}  // namespace fixture
