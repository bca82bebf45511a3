#include "curvecodes/report_io.hpp"

namespace curvecodes {

void RunMeta::write_csv_header(std::ostream& os) const {
    os << "# tool: " << kToolName << " " << kToolVersion << "\n";
    if (!field.empty()) os << "# field: " << field << "\n";
    os << "# indexing: " << kIndexingConvention << "\n";
    os << "# seed: " << seed << "\n";
    if (!extra.empty()) os << "# " << extra << "\n";
}

nlohmann::json RunMeta::to_json() const {
    nlohmann::json j;
    j["tool"] = std::string(kToolName) + " " + kToolVersion;
    if (!field.empty()) j["field"] = field;
    j["indexing"] = kIndexingConvention;
    j["seed"] = seed;
    if (!extra.empty()) j["note"] = extra;
    return j;
}

} // namespace curvecodes
