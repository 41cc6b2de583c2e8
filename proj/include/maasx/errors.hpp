#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maasx {

// Error codes shared across the stack. The gate maps them to HTTP statuses
// (see http_status_for in gate.hpp); everything else throws Error directly.
enum class Errc {
  invalid_identifier,
  non_serializable_value,
  not_found,
  storage_failure,
  conflicting_registration,
  validation_failed,
  empty_profile,
  invalid_order,
  dangling_result,
  empty_history,
  malformed_graph,
  no_history_no_fallback,
  no_capable_machine,
  no_tool_candidate,
  constant_signal,
  too_few_samples,
  too_few_runs,
  segment_mismatch,
  unknown_dataset,
  negotiation_terminated,
  expired_token,
  signature_invalid,
  access_denied,
  discovery_failed,
  illegal_transition,
  no_eligible_supplier,
  all_declined,
  config_error,
  transport_error,
  usage_error,
};

std::string_view errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace maasx
