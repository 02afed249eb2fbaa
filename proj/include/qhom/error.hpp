#pragma once

#include <stdexcept>
#include <string>

namespace qhom {

// Failure categories surfaced by the library. Mathematical check failures
// (unresolved overlaps, rank mismatches found by a verification run) are
// reported as data, not exceptions; Error is for contract violations.
enum class Errc {
  invalid_specialization,
  generic_rank_uncertain,
  incompatible_algebra,
  ambiguous_orientation,
  not_graded,
  convention_mismatch,
  internal_consistency,
  construction_failure,
  invalid_config,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace qhom
