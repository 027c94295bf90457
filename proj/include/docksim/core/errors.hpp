#pragma once

#include <stdexcept>
#include <string>

namespace docksim {

// Config file failed to parse (carries line context in the message).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A value violates a documented invariant; message names the field.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Non-recoverable numerical fault inside a simulation step; aborts the trial.
class SimulationFault : public std::runtime_error {
 public:
  explicit SimulationFault(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace docksim
