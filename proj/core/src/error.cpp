#include "mods/error.hpp"

namespace mods {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::missing_arc: return "missing-arc";
    case ErrorCode::duplicate_arc: return "duplicate-arc";
    case ErrorCode::loop: return "loop";
    case ErrorCode::last_vertex: return "last-vertex";
    case ErrorCode::not_a_mods: return "not-a-mods";
    case ErrorCode::limit_exceeded: return "limit-exceeded";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace mods
