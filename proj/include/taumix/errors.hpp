#pragma once

#include <stdexcept>
#include <string>

namespace taumix {

// A computation would exceed its memory/time budget; the caller should
// shrink the request or stream it.
class resource_limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An iterative scheme stopped without reaching the requested tolerance.
// Carries the error estimate it did achieve.
class nonconvergence_error : public std::runtime_error {
  public:
    nonconvergence_error(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved error " + std::to_string(achieved) + ")"),
          achieved_error(achieved) {}
    double achieved_error;
};

// Least-squares system too close to rank deficiency to trust.
class ill_conditioned_error : public nonconvergence_error {
  public:
    ill_conditioned_error(const std::string& what, double cond)
        : nonconvergence_error(what, cond) {}
};

}  // namespace taumix
