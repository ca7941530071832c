#ifndef ABELTAU_REPORT_HPP
#define ABELTAU_REPORT_HPP

#include <string>
#include <vector>

namespace abeltau {

struct RunRow {
    int N = 0;
    std::vector<double> errors;    // sup-norm error per component (NaN when unknown)
    std::vector<double> tau_norms; // per component
    double residual = 0.0;
    double seconds = 0.0;
};

struct RunReport {
    int components = 0;
    std::vector<RunRow> rows; // ascending N
};

/// header "N,e1,...,en,tau1,...,taun,residual,seconds"; every float as %.6e,
/// so identical reports serialize byte-identically
std::string to_csv(const RunReport& report);

/// aligned text table for terminals
std::string to_text_table(const RunReport& report);

} // namespace abeltau

#endif
