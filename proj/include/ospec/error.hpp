#pragma once

#include <stdexcept>
#include <string>

namespace ospec {

enum class errc {
  invalid_argument,  // bad parameter or malformed spec string
  validation,        // structural invariant broken; message names the offender
  cap_exceeded,      // table or enumeration size limit hit
  domain,            // hypothesis of the requested result not met
  parse,             // unreadable input text
  io,                // filesystem failure
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace ospec
