#include "sepcomp/errors.hpp"

namespace sepcomp {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_order: return "invalid-order";
    case Errc::not_associative: return "not-associative";
    case Errc::no_identity: return "no-identity";
    case Errc::no_inverse: return "no-inverse";
    case Errc::domain_mismatch: return "domain-mismatch";
    case Errc::not_invertible: return "not-invertible";
    case Errc::too_large: return "too-large";
    case Errc::search_bound_exceeded: return "search-bound-exceeded";
    case Errc::inconsistent_images: return "inconsistent-images";
    case Errc::null_homomorphism: return "null-homomorphism";
    case Errc::non_singleton_support: return "non-singleton-support";
    case Errc::not_weakly_separating: return "not-weakly-separating";
    case Errc::not_well_defined: return "not-well-defined";
    case Errc::not_bijective: return "not-bijective";
    case Errc::not_biseparating: return "not-biseparating";
    case Errc::not_pointwise_dense: return "not-pointwise-dense";
    case Errc::not_prime: return "not-prime";
    case Errc::rank_deficient: return "rank-deficient";
    case Errc::not_isometry: return "not-isometry";
    case Errc::parse_error: return "parse";
    case Errc::dangling_reference: return "dangling-reference";
    case Errc::duplicate_name: return "duplicate-name";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

int errc_exit_code(Errc c) {
  switch (c) {
    case Errc::invalid_order:
    case Errc::not_associative:
    case Errc::no_identity:
    case Errc::no_inverse:
    case Errc::domain_mismatch:
    case Errc::too_large:
    case Errc::inconsistent_images:
    case Errc::not_prime:
    case Errc::rank_deficient:
    case Errc::parse_error:
    case Errc::dangling_reference:
    case Errc::duplicate_name:
    case Errc::invalid_argument:
      return 4;
    case Errc::not_invertible:
    case Errc::search_bound_exceeded:
    case Errc::null_homomorphism:
    case Errc::non_singleton_support:
    case Errc::not_weakly_separating:
    case Errc::not_well_defined:
    case Errc::not_bijective:
    case Errc::not_biseparating:
    case Errc::not_pointwise_dense:
    case Errc::not_isometry:
      return 2;
  }
  return 4;
}

}  // namespace sepcomp
