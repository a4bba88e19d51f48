#pragma once

#include <stdexcept>
#include <string>

namespace rigsim {

// Invalid configuration or violated type invariant. CLI exit code 1.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Solver failure: singular system, non-convergence, unbounded response,
// diverging control loop. CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A scenario ran to completion but did not achieve its goal (missed pick,
// grasp timeout). CLI exit code 3.
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rigsim
