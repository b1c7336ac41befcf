#pragma once

#include <stdexcept>
#include <string>

namespace sepcomp {

// Every failure the library reports, from table validation up to the
// representation pipeline. The CLI maps each code to an exit category:
// input/validation problems exit 4, analysis hypothesis failures exit 2.
enum class Errc {
  invalid_order,
  not_associative,
  no_identity,
  no_inverse,
  domain_mismatch,
  not_invertible,
  too_large,
  search_bound_exceeded,
  inconsistent_images,
  null_homomorphism,
  non_singleton_support,
  not_weakly_separating,
  not_well_defined,
  not_bijective,
  not_biseparating,
  not_pointwise_dense,
  not_prime,
  rank_deficient,
  not_isometry,
  parse_error,
  dangling_reference,
  duplicate_name,
  invalid_argument,
};

// Stable kebab-case name, used in `ERR <exit> <kind>:` lines.
const char* errc_name(Errc c);

// CLI exit category: 4 for input errors, 2 for hypothesis/analysis failures.
int errc_exit_code(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sepcomp
