#ifndef ABELTAU_CONFIG_HPP
#define ABELTAU_CONFIG_HPP

#include "abeltau/problem.hpp"

#include <string>
#include <vector>

namespace abeltau {

// Line-oriented problem definition:
//
//     n = 2
//     alpha 1 2 = 3/4                      # rational in (0, 1]
//     kernel 1 2 = 0 0 1/Gamma(1/4)        # p q coefficient-expression
//     forcing 2 = 4 5*Gamma(1/4)/16        # l coefficient-expression
//     forcing 1 = builtin arctan_sqrt 1    # named special, optional scale
//     exact 1 = builtin arctan_sqrt 1      # optional, enables error columns
//
// '#' starts a comment; kernel/forcing/exact lines repeat and accumulate.
// Coefficient expressions admit decimals and the whitelist pi, sqrt(x),
// Gamma(x), Beta(x, y) with + - * / and parentheses, evaluated at load.

struct KernelTerm {
    int p = 0, q = 0;
    double coeff = 0.0;
};

struct ForcingTerm {
    long l = 0;
    double coeff = 0.0;
};

struct BuiltinRef {
    std::string name;
    double scale = 1.0;
};

struct ComponentSpec {
    std::vector<ForcingTerm> terms;
    std::vector<BuiltinRef> builtins;

    bool empty() const { return terms.empty() && builtins.empty(); }
};

struct ProblemConfig {
    int n = 0;
    std::vector<Rational> alphas;                 // n*n row-major
    std::vector<std::vector<KernelTerm>> kernels; // n*n row-major
    std::vector<ComponentSpec> forcing;           // n
    std::vector<ComponentSpec> exact;             // n; all empty when absent

    bool has_exact() const;
};

/// whitelist expression evaluator (also used for the CLI); raises config errors
double eval_coeff_expr(const std::string& text);

ProblemConfig parse_config(const std::string& text);
ProblemConfig load_config_file(const std::string& path);
std::string serialize_config(const ProblemConfig& cfg);

Problem config_to_problem(const ProblemConfig& cfg);

/// exact-solution callables per component (empty when the config has none)
std::vector<std::function<double(double)>> exact_solution_fns(const ProblemConfig& cfg);

/// named special functions usable in configs ("arctan_sqrt", ...)
bool is_builtin_function(const std::string& name);

} // namespace abeltau

#endif
