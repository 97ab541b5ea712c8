#ifndef MRWLAB_NELDER_MEAD_HPP
#define MRWLAB_NELDER_MEAD_HPP

#include <functional>
#include <vector>

namespace mrwlab {

struct SimplexOptions {
    std::vector<double> initial_step; // per-coordinate simplex size
    double f_tol = 1e-6;              // spread of simplex values
    double x_tol = 1e-5;              // simplex diameter, per coordinate scale
    int max_evals = 400;
    int restarts = 3;                 // re-inflate around the best point
    double restart_shrink = 0.25;     // restart simplex size factor
};

struct SimplexResult {
    std::vector<double> x;
    double f = 0.0;
    int evaluations = 0;
    bool converged = false;
    // objective value never worsened between accepted iterations
    bool monotone = true;
};

/// Minimizes f by the Nelder-Mead simplex method with adaptive coefficients
/// and a fixed number of restarts from the incumbent. Deterministic: the
/// trajectory depends only on (x0, options, f).
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, const SimplexOptions& options);

} // namespace mrwlab

#endif
