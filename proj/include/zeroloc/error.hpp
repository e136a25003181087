#pragma once

#include <stdexcept>
#include <string>

namespace zeroloc {

enum class errc {
  invalid_polynomial,
  degree_too_small,
  zero_constant_term,
  not_cauchy_type,
  not_pellet_type,
  coefficient_zero,
  invalid_index,
  invalid_scale,
  wrong_case,
  not_diagonalizable,
};

/// Exception carrying one of the library error codes above.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace zeroloc
