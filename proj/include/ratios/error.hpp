#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratios {

enum class Errc {
  sieve_too_small,
  pole,
  not_primitive,
  modulus_too_large,
  zero_detected,
  divergent_region,
  invalid_shifts,
  pole_proximity,
  out_of_strip,
  io,
  version_mismatch,
  usage,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ratios
