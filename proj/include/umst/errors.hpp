#pragma once

#include <stdexcept>
#include <string>

namespace umst {

enum class ErrorCode {
  MalformedArea,       // lo > hi
  EmptyArea,           // lo == hi with an open endpoint
  InconsistentReveal,  // revealed value outside the current area
  NotARealization,     // truth assignment violates an area
  WastedUpdate,        // update requested on a trivial area
  InvalidTree,         // edge set is not a spanning tree
  NoSpanningTree,      // graph disconnected
  NoCycle,             // cycle query on an acyclic edge set
  InstanceTooLarge,    // oracle size bound exceeded
  UnsupportedGeometry, // vertex regions with overlapping closures
  BadInput,            // malformed file or arguments
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedArea: return "malformed-area";
    case ErrorCode::EmptyArea: return "empty-area";
    case ErrorCode::InconsistentReveal: return "inconsistent-reveal";
    case ErrorCode::NotARealization: return "not-a-realization";
    case ErrorCode::WastedUpdate: return "wasted-update";
    case ErrorCode::InvalidTree: return "invalid-tree";
    case ErrorCode::NoSpanningTree: return "no-spanning-tree";
    case ErrorCode::NoCycle: return "no-cycle";
    case ErrorCode::InstanceTooLarge: return "instance-too-large";
    case ErrorCode::UnsupportedGeometry: return "unsupported-geometry";
    case ErrorCode::BadInput: return "bad-input";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace umst
