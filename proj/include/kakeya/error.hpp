#pragma once

#include <stdexcept>
#include <string>

namespace kakeya {

// Failure categories; the CLI maps these onto its documented exit codes.
enum class errc {
    invalid_input,             // bad degrees, parameters, malformed values
    degenerate_nodes,          // nodes closer than the hard separation floor
    frame_violation,           // point outside the (normalized) closed unit disc
    inconsistent_input,        // e.g. a claimed node is not actually a root
    degenerate_configuration,  // perturbation could not separate the nodes
    ill_conditioned,           // a linear solve lost too much precision
    non_convergence,           // iterative solver hit its iteration cap
    internal_check_failed,     // a mathematically guaranteed identity failed
};

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

  private:
    errc kind_;
};

// Raised by linear solves; carries a rough conditioning figure for diagnostics.
class ill_conditioned_error : public error {
  public:
    ill_conditioned_error(const std::string& msg, double condition_estimate)
        : error(errc::ill_conditioned, msg), condition_estimate_(condition_estimate) {}
    double condition_estimate() const noexcept { return condition_estimate_; }

  private:
    double condition_estimate_;
};

}  // namespace kakeya
