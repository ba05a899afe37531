#ifndef PATHCOVER_VERIFY_HPP
#define PATHCOVER_VERIFY_HPP

#include <string>

#include <json.hpp>

namespace pathcover {

/// Outcome of an independent certificate replay.
struct VerifyResult {
    bool ok = false;
    std::string message; // first violation when !ok, "ok" otherwise
};

/// Replays a certificate against the raw arc-list text. This validator
/// shares no parsing or construction code with the producers: it builds
/// its own arc set and re-checks arc existence, coverage, disjointness
/// and cycle-unit shape directly from the definitions.
VerifyResult verify_certificate(const std::string& graph_text, const nlohmann::json& cert);

} // namespace pathcover

#endif
