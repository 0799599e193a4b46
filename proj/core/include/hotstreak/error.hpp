#pragma once

#include <stdexcept>
#include <string>

namespace hotstreak {

enum class Errc {
  file_not_readable,
  schema_mismatch,
  row_parse_error,
  empty_dataset,
  conflicting_filter,
  invalid_parameter,
  mixed_players,
  empty_input,
  no_defined_points,
  too_few_pairs,
  unknown_season,
  lag_mismatch,
  too_few_players,
  invalid_spec,
  wrong_model_kind,
};

/// Library-wide error type; code() distinguishes the failure class so
/// callers (notably the CLI) can map errors to exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code) noexcept;

}  // namespace hotstreak
