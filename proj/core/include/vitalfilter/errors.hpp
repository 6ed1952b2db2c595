#ifndef VITALFILTER_ERRORS_HPP
#define VITALFILTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vitalfilter {

// Base for everything this library throws deliberately.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input bytes (bad JSON, bad TSV row, ...). Carries a 1-based line
// number when the source is line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Structurally valid input violating a documented invariant.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Stream timestamps decreased where a chronological stream was required.
class OrderingError : public Error {
 public:
  using Error::Error;
};

// Mismatched resources (feature schema fingerprints, model/catalog sizes) or
// invalid configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Training cannot proceed (single-class labels, empty split, ...).
class TrainingError : public Error {
 public:
  using Error::Error;
};

// Out-of-range metric or statistic parameters, degenerate test inputs.
class EvalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vitalfilter

#endif  // VITALFILTER_ERRORS_HPP
