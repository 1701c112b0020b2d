#ifndef SDRES_ERRORS_HPP
#define SDRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdres {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_), col(col_)
  {
  }
};

struct NotEssentialError : std::runtime_error {
  explicit NotEssentialError(const std::string& msg = "system is not Laurent transformally essential")
      : std::runtime_error(msg)
  {
  }
};

struct BoundsExceededError : std::runtime_error {
  explicit BoundsExceededError(const std::string& msg = "bounds exceeded")
      : std::runtime_error(msg)
  {
  }
};

struct InternalConsistencyError : std::runtime_error {
  explicit InternalConsistencyError(const std::string& msg)
      : std::runtime_error("internal consistency failure: " + msg)
  {
  }
};

struct DegenerateSpecializationError : std::runtime_error {
  explicit DegenerateSpecializationError(const std::string& msg = "degenerate specialization")
      : std::runtime_error(msg)
  {
  }
};

}  // namespace sdres

#endif
