#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mods {

enum class ErrorCode {
  invalid_argument,
  missing_arc,
  duplicate_arc,
  loop,
  last_vertex,
  not_a_mods,
  limit_exceeded,
  parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a code so front ends can map
// it to an exit status without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace mods
