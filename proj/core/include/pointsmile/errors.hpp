#pragma once

#include <stdexcept>
#include <string>

namespace pointsmile {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// geometry
class DegenerateCloud : public Error {
public:
  using Error::Error;
};
class InvalidK : public Error {
public:
  using Error::Error;
};
class InvalidM : public Error {
public:
  using Error::Error;
};
class InvalidConfig : public Error {
public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class IoError : public Error {
public:
  using Error::Error;
};

// tensor
class ShapeMismatch : public Error {
public:
  using Error::Error;
};
class NotScalar : public Error {
public:
  using Error::Error;
};

// augmentation / schedule
class OutOfRange : public Error {
public:
  using Error::Error;
};
class BatchTooSmall : public Error {
public:
  using Error::Error;
};

// model / checkpoint
class FormatError : public Error {
public:
  using Error::Error;
};

// losses
class NotStochastic : public Error {
public:
  using Error::Error;
};

/// Training aborted because the objective went NaN/Inf; carries the step.
class NonFiniteLoss : public Error {
public:
  NonFiniteLoss(const std::string& msg, std::uint64_t step)
      : Error(msg + " at step " + std::to_string(step)), step_(step) {}
  std::uint64_t step() const { return step_; }

private:
  std::uint64_t step_;
};

// evaluation
class DimensionMismatch : public Error {
public:
  using Error::Error;
};
class SingleClass : public Error {
public:
  using Error::Error;
};

/// Bad or unknown key in a JSON run config; carries the JSON path.
class ConfigError : public Error {
public:
  ConfigError(const std::string& msg, const std::string& json_path)
      : Error(msg + " (at \"" + json_path + "\")"), path_(json_path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace pointsmile
