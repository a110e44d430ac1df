#pragma once
#include <stdexcept>
#include <string>

namespace dpa {

// All recoverable precondition violations surface as this type.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string &msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string &msg) { throw domain_error(msg); }

inline void require(bool ok, const std::string &msg) {
  if (!ok) fail(msg);
}

} // namespace dpa
