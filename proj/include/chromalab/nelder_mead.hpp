#pragma once

#include <functional>
#include <span>
#include <vector>

namespace chromalab {

struct NelderMeadOptions {
    double initial_step = 0.1; // edge length of the axis-aligned start simplex
    double f_target = 0.0;     // stop as soon as the best value is <= this
    double x_tol = 1e-14;      // stop when the simplex has collapsed
    int max_evaluations = 20000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    int evaluations = 0;
};

/// Minimizes f by the Nelder-Mead simplex method with the dimension-adaptive
/// coefficients of Gao and Han (2012), which behave better than the classic
/// (1, 2, 0.5, 0.5) once the dimension exceeds a handful.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

} // namespace chromalab
