#ifndef ABELTAU_ERROR_HPP
#define ABELTAU_ERROR_HPP

#include <stdexcept>
#include <string>

namespace abeltau {

enum class ErrorKind {
    domain,             // argument outside the admissible range
    incompatible_sigma, // mixed exponent lattices in one operation
    capacity,           // request exceeds a built truncation / hard cap
    singular_step,      // P_r not invertible at some recursion rank
    ill_posed_system,   // tau system matrix singular
    quadrature,         // quadrature failed to converge
    unsupported_input,  // no fractional-power expansion available
    config,             // problem definition rejected
    internal            // invariant violated (library bug)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace abeltau

#endif
