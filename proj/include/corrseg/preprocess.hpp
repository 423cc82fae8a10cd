#pragma once

#include "corrseg/types.hpp"

namespace corrseg {

/// Savitzky-Golay filter parameters: an odd window of at least 3 samples and
/// a polynomial order below the window size.
struct SavGolConfig {
    SavGolConfig(std::size_t window, std::size_t polyorder);

    std::size_t window;
    std::size_t polyorder;
};

/// Center-tap convolution coefficients for the given window/polyorder,
/// derived from the least-squares normal equations on normalized sample
/// positions. Exposed so tests can probe them directly.
std::vector<double> savgol_coefficients(std::size_t window, std::size_t polyorder);

/// Smooths each dimension independently: every sample is replaced by the
/// value at the center of a least-squares polynomial fit over its window.
/// Boundaries are handled by mirror padding (reflection without repeating
/// the edge sample). Reproduces polynomials of degree <= polyorder exactly.
Trajectory savgol_smooth(const Trajectory& traj, const SavGolConfig& cfg);

/// Piecewise-linear resampling to n_out points at uniformly spaced
/// fractional indices over [0, T-1]. Endpoints are preserved bit-exactly.
Trajectory resample(const Trajectory& traj, std::size_t n_out);

}  // namespace corrseg
