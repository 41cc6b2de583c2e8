#include "maasx/errors.hpp"

namespace maasx {

std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::invalid_identifier: return "InvalidIdentifier";
    case Errc::non_serializable_value: return "NonSerializableValue";
    case Errc::not_found: return "NotFound";
    case Errc::storage_failure: return "StorageFailure";
    case Errc::conflicting_registration: return "ConflictingRegistration";
    case Errc::validation_failed: return "ValidationFailed";
    case Errc::empty_profile: return "EmptyProfile";
    case Errc::invalid_order: return "InvalidOrder";
    case Errc::dangling_result: return "DanglingResult";
    case Errc::empty_history: return "EmptyHistory";
    case Errc::malformed_graph: return "MalformedGraph";
    case Errc::no_history_no_fallback: return "NoHistoryNoFallback";
    case Errc::no_capable_machine: return "NoCapableMachine";
    case Errc::no_tool_candidate: return "NoToolCandidate";
    case Errc::constant_signal: return "ConstantSignal";
    case Errc::too_few_samples: return "TooFewSamples";
    case Errc::too_few_runs: return "TooFewRuns";
    case Errc::segment_mismatch: return "SegmentMismatch";
    case Errc::unknown_dataset: return "UnknownDataset";
    case Errc::negotiation_terminated: return "NegotiationTerminated";
    case Errc::expired_token: return "ExpiredToken";
    case Errc::signature_invalid: return "SignatureInvalid";
    case Errc::access_denied: return "AccessDenied";
    case Errc::discovery_failed: return "DiscoveryFailed";
    case Errc::illegal_transition: return "IllegalTransition";
    case Errc::no_eligible_supplier: return "NoEligibleSupplier";
    case Errc::all_declined: return "AllDeclined";
    case Errc::config_error: return "ConfigError";
    case Errc::transport_error: return "TransportError";
    case Errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace maasx
