#include "binmms/harness/json_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace binmms::harness {

namespace {

const Json& field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return json.at(key);
}

Bundle bundleFromJson(const Json& json) {
  if (!json.is_array()) throw std::invalid_argument("bundle must be an array of item ids");
  std::vector<ItemId> items;
  for (const auto& e : json) items.push_back(e.get<ItemId>());
  return makeBundle(std::move(items));
}

std::vector<Bundle> bundlesFromJson(const Json& json) {
  if (!json.is_array()) throw std::invalid_argument("expected an array of bundles");
  std::vector<Bundle> out;
  for (const auto& b : json) out.push_back(bundleFromJson(b));
  return out;
}

}  // namespace

Json instanceToJson(const Instance& instance) {
  Json sizes = Json::array();
  for (const auto& row : instance.sizes()) {
    Json r = Json::array();
    for (const auto& s : row) r.push_back(s.str());
    sizes.push_back(std::move(r));
  }
  return {{"n", instance.agentCount()}, {"m", instance.itemCount()}, {"sizes", sizes}};
}

Instance instanceFromJson(const Json& json) {
  const auto& sizes = field(json, "sizes");
  if (!sizes.is_array()) throw std::invalid_argument("'sizes' must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : sizes) {
    if (!row.is_array()) throw std::invalid_argument("each row of 'sizes' must be an array");
    std::vector<Rational> r;
    for (const auto& s : row) {
      if (s.is_string()) r.push_back(Rational::parse(s.get<std::string>()));
      else if (s.is_number_integer()) r.emplace_back(s.get<std::int64_t>());
      else throw std::invalid_argument("sizes must be \"p/q\" strings or integers");
    }
    rows.push_back(std::move(r));
  }
  if (json.contains("n") && json.at("n").get<std::size_t>() != rows.size())
    throw std::invalid_argument("'n' does not match the number of rows");
  if (json.contains("m") && !rows.empty() && json.at("m").get<std::size_t>() != rows.front().size())
    throw std::invalid_argument("'m' does not match the row length");
  return Instance(std::move(rows));
}

Json certificatesToJson(const std::vector<MmsCertificate>& certificates) {
  Json kappa = Json::array();
  Json witness = Json::array();
  for (const auto& c : certificates) {
    kappa.push_back(c.kappa);
    witness.push_back(c.witness);
  }
  const Model model = certificates.empty() ? Model::Covering : certificates.front().model;
  return {{"model", toString(model)}, {"kappa", kappa}, {"witness", witness}};
}

std::vector<MmsCertificate> certificatesFromJson(const Json& json) {
  const Model model = parseModel(field(json, "model").get<std::string>());
  const auto& kappa = field(json, "kappa");
  const auto& witness = field(json, "witness");
  if (!kappa.is_array() || !witness.is_array() || kappa.size() != witness.size())
    throw std::invalid_argument("'kappa' and 'witness' must be arrays of equal length");
  std::vector<MmsCertificate> out;
  for (std::size_t i = 0; i < kappa.size(); ++i)
    out.push_back({model, kappa[i].get<std::size_t>(), bundlesFromJson(witness[i])});
  return out;
}

Json allocationToJson(const Allocation& allocation) { return allocation.bundles; }

Allocation allocationFromJson(const Json& json) { return {bundlesFromJson(json)}; }

Json witnessesToJson(const std::vector<BinPartition>& witnesses) {
  Json out = Json::array();
  for (const auto& w : witnesses) out.push_back(w.bins);
  return out;
}

std::vector<BinPartition> witnessesFromJson(const Json& json, const Instance& instance) {
  if (!json.is_array() || json.size() != instance.agentCount())
    throw std::invalid_argument("expected one witness per agent");
  std::vector<BinPartition> out;
  for (std::size_t i = 0; i < json.size(); ++i) {
    auto bins = bundlesFromJson(json[i]);
    for (const auto& bin : bins)
      for (ItemId e : bin)
        if (e >= instance.itemCount()) throw std::invalid_argument("witness item out of range");
    out.push_back(makeBinPartition(instance.row(i), std::move(bins)));
  }
  return out;
}

Json reportToJson(const VerificationReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    char checksum[20];
    std::snprintf(checksum, sizeof checksum, "%016" PRIx64, r.checksum);
    rows.push_back({{"instance_id", r.instanceId},
                    {"model", toString(r.algorithm)},
                    {"agent", r.agent},
                    {"kappa", r.kappa},
                    {"achieved", r.achieved},
                    {"bound", r.bound},
                    {"pass", r.pass},
                    {"note", r.note},
                    {"checksum", checksum}});
  }
  return {{"pass", report.pass()}, {"rows", rows}};
}

Json readJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void writeJsonFile(const std::filesystem::path& path, const Json& json) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << json.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace binmms::harness
