#include "chromalab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chromalab {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                             const NelderMeadOptions& options)
{
    const std::size_t n = x0.size();
    if (n == 0)
        throw std::invalid_argument("nelder_mead: empty start point");

    const double dn = static_cast<double>(n);
    const double alpha = 1.0;
    const double gamma = 1.0 + 2.0 / dn;
    const double rho = 0.75 - 1.0 / (2.0 * dn);
    const double sigma = 1.0 - 1.0 / dn;

    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        const double v = f(x);
        return std::isnan(v) ? HUGE_VAL : v;
    };

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        simplex[i + 1][i] += options.initial_step;
    for (std::size_t i = 0; i <= n; ++i)
        fv[i] = eval(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    auto point = [&](double t, std::vector<double>& out) {
        // centroid + t (centroid - worst)
        const auto& worst = simplex[order[n]];
        for (std::size_t j = 0; j < n; ++j)
            out[j] = centroid[j] + t * (centroid[j] - worst[j]);
    };

    for (;;) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });

        const std::size_t best = order[0];
        if (fv[best] <= options.f_target || evals >= options.max_evaluations)
            break;
        double size = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                size = std::max(size, std::abs(simplex[order[i]][j] - simplex[best][j]));
        if (size <= options.x_tol)
            break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                centroid[j] += simplex[order[i]][j];
        for (auto& c : centroid)
            c /= dn;

        const std::size_t worst = order[n];
        const double f_best = fv[best];
        const double f_second = fv[order[n - 1]];
        const double f_worst = fv[worst];

        point(alpha, xr);
        const double fr = eval(xr);
        if (fr < f_best) {
            point(alpha * gamma, xe);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[worst] = xe;
                fv[worst] = fe;
            } else {
                simplex[worst] = xr;
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < f_second) {
            simplex[worst] = xr;
            fv[worst] = fr;
            continue;
        }
        const bool outside = fr < f_worst;
        point(outside ? alpha * rho : -rho, xc);
        const double fc = eval(xc);
        if (fc < (outside ? fr : f_worst)) {
            simplex[worst] = xc;
            fv[worst] = fc;
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            auto& x = simplex[order[i]];
            for (std::size_t j = 0; j < n; ++j)
                x[j] = simplex[best][j] + sigma * (x[j] - simplex[best][j]);
            fv[order[i]] = eval(x);
        }
    }

    const std::size_t best = order[0];
    return {simplex[best], fv[best], evals};
}

} // namespace chromalab
