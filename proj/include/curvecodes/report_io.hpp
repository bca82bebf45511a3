#ifndef CURVECODES_REPORT_IO_HPP
#define CURVECODES_REPORT_IO_HPP

#include <cstdint>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>

namespace curvecodes {

inline constexpr const char* kToolName = "curvecodes";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kIndexingConvention = "rho_1 = 0";

/// Every emitted file starts with these lines so a run is reproducible from
/// the artifact alone.  No timestamps: identical config must give identical
/// bytes.
struct RunMeta {
    std::string field;   ///< e.g. "GF(2^12), modulus x^12+x^6+x^4+x+1, generator code 2"
    uint64_t seed = 0;
    std::string extra;   ///< optional one-liner (ordering rule etc.)

    void write_csv_header(std::ostream& os) const;
    nlohmann::json to_json() const;
};

} // namespace curvecodes

#endif
