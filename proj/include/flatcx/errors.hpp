#pragma once

#include <stdexcept>
#include <string>

namespace flatcx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };
class SingularMatrix : public Error { using Error::Error; };
class OddDimension : public Error { using Error::Error; };
class InvalidComplexStructure : public Error { using Error::Error; };
class InvalidMetric : public Error { using Error::Error; };
class NotHermitian : public Error { using Error::Error; };
class NotIntegrable : public Error { using Error::Error; };
class NotTorsionFree : public Error { using Error::Error; };
class InvalidLieAlgebra : public Error { using Error::Error; };
class NotFound : public Error { using Error::Error; };

// Malformed textual input. `location` is either "line L, column C" for
// syntax errors or a JSON pointer for schema errors.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string location = {})
      : Error(location.empty() ? message : message + " (at " + location + ")"),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace flatcx
