#ifndef ABELTAU_QUADRATURE_HPP
#define ABELTAU_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace abeltau {

// Gauss-Jacobi rule on [0, 1] for the weight u^xi (1 - u)^theta, theta, xi > -1:
//
//     integral_0^1 (1-u)^theta u^xi f(u) du  ~=  sum_k w[k] f(u[k]).
//
// Nodes and weights come from the Golub-Welsch eigenproblem of the monic
// Jacobi recurrence, so endpoint-singular weights (theta or xi in (-1, 0))
// are handled exactly.
struct JacobiRule {
    std::vector<double> nodes;   // in (0, 1)
    std::vector<double> weights; // positive

    double integrate(const std::function<double(double)>& f) const {
        double acc = 0.0;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            acc += weights[k] * f(nodes[k]);
        return acc;
    }
};

JacobiRule gauss_jacobi(int n_nodes, double theta, double xi);

// Tanh-sinh quadrature over (0, 1) with automatic level refinement; robust
// against integrable algebraic singularities at either endpoint.  The
// integrand receives both u and 1-u, each computed without cancellation, so
// endpoint-singular factors must be built from the appropriate argument.
// Used as the independent oracle route for the weakly singular integrals,
// never as part of the coefficient-space operator itself.
double tanh_sinh(const std::function<double(double, double)>& f, double rel_tol = 1e-12,
                 int max_level = 12);

} // namespace abeltau

#endif
