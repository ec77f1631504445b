#pragma once

#include <stdexcept>
#include <string>

namespace charflow {

struct BackendMismatch : std::runtime_error {
  explicit BackendMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ComponentMismatch : std::runtime_error {
  explicit ComponentMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct KindMismatch : std::runtime_error {
  explicit KindMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DepthCapExceeded : std::runtime_error {
  explicit DepthCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRange : std::runtime_error {
  explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateSlice : std::runtime_error {
  explicit DegenerateSlice(const std::string& what) : std::runtime_error(what) {}
};

struct NotHyperbolicSlice : std::runtime_error {
  explicit NotHyperbolicSlice(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct CoverFailure : std::runtime_error {
  explicit CoverFailure(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationFailed : std::runtime_error {
  VerificationFailed(const std::string& what, long step)
      : std::runtime_error(what), diverging_step(step) {}
  long diverging_step;
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyRegion : std::runtime_error {
  explicit EmptyRegion(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace charflow
