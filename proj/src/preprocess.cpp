#include "corrseg/preprocess.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace corrseg {

namespace {

// Solves the small dense system N x = rhs in place, Gaussian elimination
// with partial pivoting. N is (p+1)x(p+1) with p the polynomial order.
std::vector<double> solve_dense(std::vector<std::vector<double>> n, std::vector<double> rhs) {
    const std::size_t size = rhs.size();
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < size; ++r) {
            if (std::fabs(n[r][col]) > std::fabs(n[pivot][col])) {
                pivot = r;
            }
        }
        if (n[pivot][col] == 0.0) {
            throw internal_error("singular normal equations in Savitzky-Golay fit");
        }
        std::swap(n[col], n[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = col + 1; r < size; ++r) {
            const double f = n[r][col] / n[col][col];
            for (std::size_t c = col; c < size; ++c) {
                n[r][c] -= f * n[col][c];
            }
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(size, 0.0);
    for (std::size_t r = size; r-- > 0;) {
        double acc = rhs[r];
        for (std::size_t c = r + 1; c < size; ++c) {
            acc -= n[r][c] * x[c];
        }
        x[r] = acc / n[r][r];
    }
    return x;
}

// Reflects an out-of-range sample index back into [0, size) without
// repeating the edge sample: -1 -> 1, size -> size-2.
std::size_t mirror_index(std::ptrdiff_t idx, std::size_t size) {
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(size) - 1;
    while (idx < 0 || idx > last) {
        if (idx < 0) {
            idx = -idx;
        }
        if (idx > last) {
            idx = 2 * last - idx;
        }
    }
    return static_cast<std::size_t>(idx);
}

}  // namespace

SavGolConfig::SavGolConfig(std::size_t window_in, std::size_t polyorder_in)
    : window(window_in), polyorder(polyorder_in) {
    if (window < 3 || window % 2 == 0) {
        throw std::invalid_argument("Savitzky-Golay window must be odd and >= 3");
    }
    if (polyorder >= window) {
        throw std::invalid_argument("Savitzky-Golay polyorder must be < window");
    }
}

std::vector<double> savgol_coefficients(std::size_t window, std::size_t polyorder) {
    SavGolConfig cfg(window, polyorder);  // validates
    const std::size_t half = (window - 1) / 2;
    const std::size_t terms = polyorder + 1;

    // Sample positions normalized to [-1, 1] keep the Gram matrix well
    // scaled for large windows; the fitted center value is unaffected.
    std::vector<double> pos(window);
    for (std::size_t o = 0; o < window; ++o) {
        pos[o] = (static_cast<double>(o) - static_cast<double>(half)) / static_cast<double>(half);
    }

    std::vector<std::vector<double>> vandermonde(window, std::vector<double>(terms));
    for (std::size_t o = 0; o < window; ++o) {
        double p = 1.0;
        for (std::size_t j = 0; j < terms; ++j) {
            vandermonde[o][j] = p;
            p *= pos[o];
        }
    }

    std::vector<std::vector<double>> gram(terms, std::vector<double>(terms, 0.0));
    for (std::size_t a = 0; a < terms; ++a) {
        for (std::size_t b = 0; b < terms; ++b) {
            double acc = 0.0;
            for (std::size_t o = 0; o < window; ++o) {
                acc += vandermonde[o][a] * vandermonde[o][b];
            }
            gram[a][b] = acc;
        }
    }

    // Row 0 of the projector: coefficient c_o weights sample o in the fitted
    // value at the window center (position 0).
    std::vector<double> e0(terms, 0.0);
    e0[0] = 1.0;
    const std::vector<double> row = solve_dense(std::move(gram), std::move(e0));

    std::vector<double> coeffs(window);
    for (std::size_t o = 0; o < window; ++o) {
        double acc = 0.0;
        for (std::size_t j = 0; j < terms; ++j) {
            acc += row[j] * vandermonde[o][j];
        }
        coeffs[o] = acc;
    }
    return coeffs;
}

Trajectory savgol_smooth(const Trajectory& traj, const SavGolConfig& cfg) {
    if (cfg.window > traj.size()) {
        throw std::invalid_argument("Savitzky-Golay window " + std::to_string(cfg.window) +
                                    " exceeds trajectory length " + std::to_string(traj.size()));
    }
    const std::vector<double> coeffs = savgol_coefficients(cfg.window, cfg.polyorder);
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>((cfg.window - 1) / 2);
    const std::size_t d = traj.dim();

    std::vector<double> out(traj.size() * d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t c = 0; c < traj.size(); ++c) {
            double acc = 0.0;
            for (std::ptrdiff_t o = -half; o <= half; ++o) {
                const std::size_t idx = mirror_index(static_cast<std::ptrdiff_t>(c) + o,
                                                     traj.size());
                acc += coeffs[static_cast<std::size_t>(o + half)] * traj(idx, j);
            }
            out[c * d + j] = acc;
        }
    }
    return Trajectory(traj.size(), d, std::move(out));
}

Trajectory resample(const Trajectory& traj, std::size_t n_out) {
    if (n_out < 2) {
        throw std::invalid_argument("resampling requires n_out >= 2");
    }
    const std::size_t d = traj.dim();
    const std::size_t last = traj.size() - 1;
    std::vector<double> out(n_out * d);
    for (std::size_t i = 0; i < n_out; ++i) {
        if (i == 0 || i == n_out - 1) {
            const std::size_t src = i == 0 ? 0 : last;
            for (std::size_t j = 0; j < d; ++j) {
                out[i * d + j] = traj(src, j);
            }
            continue;
        }
        const double pos = static_cast<double>(i) * static_cast<double>(last) /
                           static_cast<double>(n_out - 1);
        const std::size_t lo = std::min(static_cast<std::size_t>(pos), last - 1);
        const double frac = pos - static_cast<double>(lo);
        for (std::size_t j = 0; j < d; ++j) {
            out[i * d + j] = traj(lo, j) + frac * (traj(lo + 1, j) - traj(lo, j));
        }
    }
    return Trajectory(n_out, d, std::move(out));
}

}  // namespace corrseg
