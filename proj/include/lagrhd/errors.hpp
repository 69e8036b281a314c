#ifndef LAGRHD_ERRORS_HPP
#define LAGRHD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lagrhd {

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateState : std::runtime_error {
  explicit DegenerateState(const std::string& what) : std::runtime_error(what) {}
};

struct InternalSolverError : std::runtime_error {
  explicit InternalSolverError(const std::string& what) : std::runtime_error(what) {}
};

struct StepRejected : std::runtime_error {
  explicit StepRejected(const std::string& what) : std::runtime_error(what) {}
};

struct TangledCell : std::runtime_error {
  explicit TangledCell(const std::string& what) : std::runtime_error(what) {}
};

struct InadmissibleAverage : std::runtime_error {
  explicit InadmissibleAverage(const std::string& what) : std::runtime_error(what) {}
};

struct CharacteristicFold : std::runtime_error {
  explicit CharacteristicFold(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lagrhd

#endif
