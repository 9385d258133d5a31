#ifndef BINMMS_HARNESS_JSON_IO_HPP
#define BINMMS_HARNESS_JSON_IO_HPP

#include <filesystem>
#include <vector>

#include "binmms/harness/verify.hpp"
#include "binmms/model.hpp"
#include "json.hpp"

namespace binmms::harness {

using Json = nlohmann::json;

/// {"n": n, "m": m, "sizes": [["p/q", ...], ...]}
Json instanceToJson(const Instance& instance);
/// Throws std::invalid_argument on malformed input, InvalidSizeError on bad sizes.
Instance instanceFromJson(const Json& json);

/// {"model": "covering", "kappa": [...], "witness": [[[item, ...], ...], ...]}
Json certificatesToJson(const std::vector<MmsCertificate>& certificates);
std::vector<MmsCertificate> certificatesFromJson(const Json& json);

Json allocationToJson(const Allocation& allocation);
Allocation allocationFromJson(const Json& json);

/// [[[item, ...], ...], ...] per agent; totals are recomputed on read.
Json witnessesToJson(const std::vector<BinPartition>& witnesses);
std::vector<BinPartition> witnessesFromJson(const Json& json, const Instance& instance);

Json reportToJson(const VerificationReport& report);

/// Throw std::runtime_error naming the path on I/O or parse failure.
Json readJsonFile(const std::filesystem::path& path);
void writeJsonFile(const std::filesystem::path& path, const Json& json);

}  // namespace binmms::harness

#endif  // BINMMS_HARNESS_JSON_IO_HPP
