#ifndef PATHCOVER_CERTIFICATE_HPP
#define PATHCOVER_CERTIFICATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathcover/graph.hpp"

namespace pathcover {

enum class CoverMode { Cover, Partition };

std::string cover_mode_name(CoverMode mode);
CoverMode cover_mode_from_name(const std::string& name);

/// One addend of a claimed size bound. Values are decimal strings so
/// bounds beyond native integer range survive serialization.
struct BoundTerm {
    std::string name;
    std::string value;
    std::string formula; // closed form, empty when none
};

struct BoundInfo {
    std::string total;
    std::vector<BoundTerm> terms;
};

/// A family of directed paths claimed to cover (or partition) the host's
/// vertex set, together with the arithmetic that justified its size.
struct PathCoverCertificate {
    CoverMode mode = CoverMode::Cover;
    int n = 0; // construction parameter; 0 when not applicable
    std::vector<VertexList> paths;
    std::optional<BoundInfo> bound;
    std::map<std::string, std::string> constants;
    std::map<std::string, std::string> provenance;

    int size() const { return static_cast<int>(paths.size()); }
};

/// A unit is either a directed cycle (vertices in cyclic order) or a
/// weakly connected subdigraph on at most two vertices.
struct CycleUnit {
    bool is_cycle = false;
    VertexList vertices;
};

struct CycleCoverCertificate {
    CoverMode mode = CoverMode::Cover;
    std::vector<CycleUnit> units;
    std::map<std::string, std::string> provenance;

    int size() const { return static_cast<int>(units.size()); }
};

nlohmann::ordered_json to_json(const PathCoverCertificate& cert);
nlohmann::ordered_json to_json(const CycleCoverCertificate& cert);

PathCoverCertificate path_certificate_from_json(const nlohmann::json& j);
CycleCoverCertificate cycle_certificate_from_json(const nlohmann::json& j);

/// True when j carries a cycle certificate ("kind": "cycle-cover").
bool is_cycle_certificate(const nlohmann::json& j);

} // namespace pathcover

#endif
