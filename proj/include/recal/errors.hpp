#pragma once

#include <stdexcept>
#include <string>

namespace recal {

// Shape mismatch between matrices (message names both shapes).
class ShapeError : public std::runtime_error {
public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Out-of-range or otherwise invalid argument to an operation.
class ParamError : public std::runtime_error {
public:
  explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration; message names the offending field.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure during an evaluation (non-finite value etc).
class EvalError : public std::runtime_error {
public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// Training failed to meet its contract (divergence, non-convergence).
class TrainingError : public std::runtime_error {
public:
  explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem / serialization failure.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace recal
