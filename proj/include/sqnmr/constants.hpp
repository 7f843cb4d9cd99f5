#pragma once

namespace sqnmr {

// CODATA exact SI values, hard-coded for bit-reproducibility
inline constexpr double hbar = 1.054571817e-34; // J s
inline constexpr double k_B = 1.380649e-23;     // J / K

inline constexpr double pi = 3.14159265358979323846;

} // namespace sqnmr
