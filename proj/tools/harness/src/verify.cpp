#include "binmms/harness/verify.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "binmms/cover_cardinal.hpp"
#include "binmms/cover_ordinal.hpp"
#include "binmms/errors.hpp"
#include "binmms/harness/generators.hpp"
#include "binmms/harness/oracle.hpp"
#include "binmms/pack_ordinal.hpp"

namespace binmms::harness {

std::string_view toString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::CoverCardinal: return "cover-cardinal";
    case Algorithm::CoverOrdinal: return "cover-ordinal";
    case Algorithm::PackOrdinal: return "pack-ordinal";
  }
  return "unknown";
}

Algorithm parseAlgorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::CoverCardinal, Algorithm::CoverOrdinal, Algorithm::PackOrdinal})
    if (toString(a) == text) return a;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

bool VerificationReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

namespace {

Rational total(std::span<const Rational> row, const Bundle& bin) {
  Rational sum(0);
  for (ItemId e : bin) sum += row[e];
  return sum;
}

bool partitions(const std::vector<Bundle>& bins, const Bundle& parent, std::size_t m) {
  std::vector<char> seen(m, 0);
  std::size_t count = 0;
  for (const auto& bin : bins) {
    for (ItemId e : bin) {
      if (e >= m || seen[e]) return false;
      seen[e] = 1;
      ++count;
    }
  }
  if (count != parent.size()) return false;
  return std::all_of(parent.begin(), parent.end(), [&](ItemId e) { return e < m && seen[e]; });
}

bool validAllocation(const Allocation& allocation, std::size_t n, std::size_t m) {
  return allocation.bundles.size() == n && partitions(allocation.bundles, allItems(m), m);
}

void append(std::string& note, std::string_view text) {
  if (!note.empty()) note += "; ";
  note += text;
}

}  // namespace

std::optional<std::size_t> certifiedKappa(const Instance& instance, AgentId agent, Model model,
                                          const MmsCertificate* certificate,
                                          const VerifyOptions& options, std::string& note) {
  const std::size_t n = instance.agentCount();
  const std::size_t m = instance.itemCount();
  if (m <= options.cap && m <= kOracleBundleCap) {
    const std::size_t kappa = model == Model::Covering ? oracleMmsCover(instance, agent, options.cap)
                                                       : oracleMmsPack(instance, agent, options.cap);
    if (certificate && certificate->kappa != kappa)
      append(note, "certificate kappa " + std::to_string(certificate->kappa) + " differs");
    return kappa;
  }
  if (!certificate) {
    append(note, "no certificate beyond the oracle cap");
    return std::nullopt;
  }
  if (certificate->model != model || certificate->witness.size() != n ||
      !partitions(certificate->witness, allItems(m), m)) {
    append(note, "certificate is not an n-partition of the items");
    return std::nullopt;
  }
  const auto row = instance.row(agent);
  for (const auto& part : certificate->witness) {
    if (part.size() > kOracleBundleCap) {
      append(note, "certificate part too large to check");
      return std::nullopt;
    }
    const bool ok = model == Model::Covering ? oracleCover(row, part) >= certificate->kappa
                                             : oraclePack(row, part) <= certificate->kappa;
    if (!ok) {
      append(note, "certificate part misses kappa");
      return std::nullopt;
    }
  }
  const Rational share = total(row, allItems(m)) / Rational(static_cast<std::int64_t>(n));
  const auto kappa = static_cast<std::int64_t>(certificate->kappa);
  const bool tight = model == Model::Covering ? share.floor() == kappa : share.ceil() == kappa;
  append(note, tight ? "certificate kappa, tight" : "certificate kappa, one-sided");
  return certificate->kappa;
}

namespace {

template <typename RowCheck>
VerificationReport perAgent(const Instance& instance, const std::vector<MmsCertificate>& certificates,
                            const Allocation& allocation, Algorithm algorithm, Model model,
                            const VerifyOptions& options, RowCheck check) {
  const std::size_t n = instance.agentCount();
  const std::size_t m = instance.itemCount();
  const bool allocationOk = validAllocation(allocation, n, m);
  VerificationReport report;
  for (AgentId i = 0; i < n; ++i) {
    ReportRow row;
    row.instanceId = options.instanceId;
    row.algorithm = algorithm;
    row.agent = i;
    const MmsCertificate* cert = i < certificates.size() ? &certificates[i] : nullptr;
    const auto kappa = certifiedKappa(instance, i, model, cert, options, row.note);
    if (!allocationOk) {
      append(row.note, "allocation is not a partition");
    } else if (kappa) {
      row.kappa = *kappa;
      row.pass = check(i, *kappa, row);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

VerificationReport verifyCmmsCover(const Instance& instance,
                                   const std::vector<MmsCertificate>& certificates,
                                   const Allocation& allocation,
                                   const std::vector<BinPartition>& witnesses,
                                   const Rational& alpha, const VerifyOptions& options) {
  const std::size_t m = instance.itemCount();
  return perAgent(instance, certificates, allocation, Algorithm::CoverCardinal, Model::Covering,
                  options, [&](AgentId i, std::size_t kappa, ReportRow& out) {
    out.bound = static_cast<std::int64_t>(kappa);
    if (i >= witnesses.size()) {
      append(out.note, "missing witness");
      return false;
    }
    const auto& bins = witnesses[i].bins;
    out.checksum = witnessChecksum(bins);
    if (!partitions(bins, allocation.bundles[i], m)) {
      append(out.note, "witness is not a partition of the bundle");
      return false;
    }
    const auto row = instance.row(i);
    out.achieved = std::count_if(bins.begin(), bins.end(),
                                 [&](const Bundle& b) { return total(row, b) >= alpha; });
    if (kappa == 0) return true;
    if (bins.size() != kappa) {
      append(out.note, "witness has " + std::to_string(bins.size()) + " bins");
      return false;
    }
    return out.achieved == out.bound;
  });
}

VerificationReport verifyOmmsCover(const Instance& instance,
                                   const std::vector<MmsCertificate>& certificates,
                                   const Allocation& allocation,
                                   const std::vector<BinPartition>* witnesses,
                                   const VerifyOptions& options) {
  const std::size_t m = instance.itemCount();
  return perAgent(instance, certificates, allocation, Algorithm::CoverOrdinal, Model::Covering,
                  options, [&](AgentId i, std::size_t kappa, ReportRow& out) {
    out.bound = Rational(3 * static_cast<std::int64_t>(kappa) - 7, 4).ceil();
    const auto row = instance.row(i);
    const Bundle& bundle = allocation.bundles[i];
    std::optional<std::int64_t> witnessCount;
    if (witnesses && i < witnesses->size()) {
      const auto& bins = (*witnesses)[i].bins;
      out.checksum = witnessChecksum(bins);
      if (partitions(bins, bundle, m))
        witnessCount = std::count_if(bins.begin(), bins.end(),
                                     [&](const Bundle& b) { return total(row, b) >= Rational(1); });
      else
        append(out.note, "witness is not a partition of the bundle");
    }
    if (bundle.size() <= std::min(options.cap, kOracleBundleCap)) {
      out.achieved = static_cast<std::int64_t>(oracleCover(row, bundle));
      append(out.note, "oracle-verified");
      if (witnessCount && *witnessCount < out.bound) append(out.note, "witness-gap");
      return out.achieved >= out.bound;
    }
    if (!witnessCount) {
      append(out.note, "bundle beyond the oracle cap and no usable witness");
      return false;
    }
    out.achieved = *witnessCount;
    append(out.note, "witness-verified");
    return out.achieved >= out.bound;
  });
}

VerificationReport verifyOmmsPack(const Instance& instance,
                                  const std::vector<MmsCertificate>& certificates,
                                  const Allocation& allocation,
                                  const std::vector<BinPartition>& witnesses,
                                  const VerifyOptions& options) {
  const std::size_t m = instance.itemCount();
  return perAgent(instance, certificates, allocation, Algorithm::PackOrdinal, Model::Packing,
                  options, [&](AgentId i, std::size_t kappa, ReportRow& out) {
    out.bound = Rational(4 * static_cast<std::int64_t>(kappa) + 4, 3).floor();
    if (i >= witnesses.size()) {
      append(out.note, "missing witness");
      return false;
    }
    const auto row = instance.row(i);
    const Bundle& bundle = allocation.bundles[i];
    const auto& bins = witnesses[i].bins;
    out.checksum = witnessChecksum(bins);
    if (!partitions(bins, bundle, m)) {
      append(out.note, "witness is not a partition of the bundle");
      return false;
    }
    const auto used = std::count_if(bins.begin(), bins.end(),
                                    [](const Bundle& b) { return !b.empty(); });
    out.achieved = used;
    bool ok = used <= out.bound;
    if (std::any_of(bins.begin(), bins.end(),
                    [&](const Bundle& b) { return total(row, b) > Rational(1); })) {
      append(out.note, "a witness bin exceeds 1");
      ok = false;
    }
    if (bundle.size() <= std::min(options.cap, kOracleBundleCap)) {
      const auto exact = static_cast<std::int64_t>(oraclePack(row, bundle));
      append(out.note, "oracle-verified c=" + std::to_string(exact));
      ok = ok && exact <= out.bound;
    } else {
      append(out.note, "witness-verified");
    }
    return ok;
  });
}

VerificationReport solveAndVerify(const Instance& instance, Algorithm algorithm,
                                  const VerifyOptions& options) {
  SearchLimits limits;
  limits.maxMmsItems = options.cap;
  limits.maxMmsAgents = std::max(limits.maxMmsAgents, instance.agentCount());
  try {
    switch (algorithm) {
      case Algorithm::CoverCardinal: {
        const auto sol = solveCoverCardinal(instance, nullptr, {EdgeMode::Constructive, limits});
        return verifyCmmsCover(instance, sol.certificates, sol.allocation, sol.witnesses,
                               Rational(2, 3), options);
      }
      case Algorithm::CoverOrdinal: {
        const auto sol = solveCoverOrdinal(instance, nullptr, limits);
        return verifyOmmsCover(instance, sol.certificates, sol.allocation, &sol.witnesses,
                               options);
      }
      case Algorithm::PackOrdinal: {
        const auto sol = solvePackOrdinal(instance, nullptr, limits);
        return verifyOmmsPack(instance, sol.certificates, sol.allocation, sol.witnesses, options);
      }
    }
  } catch (const Error& e) {
    VerificationReport report;
    for (AgentId i = 0; i < instance.agentCount(); ++i) {
      ReportRow row;
      row.instanceId = options.instanceId;
      row.algorithm = algorithm;
      row.agent = i;
      row.note = std::string("solver error: ") + e.what();
      report.rows.push_back(std::move(row));
    }
    return report;
  }
  throw std::invalid_argument("unknown algorithm");
}

BatchSummary summarize(std::vector<ReportRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.instanceId, a.algorithm, a.agent) <
           std::tie(b.instanceId, b.algorithm, b.agent);
  });
  BatchSummary out;
  out.failures = static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass; }));
  out.rows = std::move(rows);
  return out;
}

namespace {

std::string instanceName(std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "u%06zu", index);
  return buf;
}

std::vector<ReportRow> runOne(const BatchConfig& config, std::size_t index) {
  const Instance instance =
      corpusInstance(config.seed + index, config.maxItems, config.denominator);
  VerifyOptions options{instanceName(index), config.cap};
  std::vector<ReportRow> rows;
  for (Algorithm a : config.algorithms) {
    auto report = solveAndVerify(instance, a, options);
    rows.insert(rows.end(), report.rows.begin(), report.rows.end());
  }
  return rows;
}

void writeFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

BatchSummary runBatch(const BatchConfig& config) {
  std::vector<ReportRow> rows;
  const std::size_t jobs = std::max<std::size_t>(config.jobs, 1);
  for (std::size_t start = 0; start < config.count; start += jobs) {
    std::vector<std::future<std::vector<ReportRow>>> pending;
    for (std::size_t idx = start; idx < std::min(config.count, start + jobs); ++idx)
      pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, runOne,
                                   std::cref(config), idx));
    for (auto& f : pending) {
      auto part = f.get();
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  BatchSummary summary = summarize(std::move(rows));
  if (config.csvPath) writeFile(*config.csvPath, toCsv(summary));
  if (config.markdownPath) writeFile(*config.markdownPath, toMarkdown(summary));
  return summary;
}

std::string toCsv(const BatchSummary& summary) {
  std::ostringstream out;
  out << "instance_id,model,agent,kappa,achieved,bound,pass\n";
  for (const auto& r : summary.rows)
    out << r.instanceId << ',' << toString(r.algorithm) << ',' << r.agent << ',' << r.kappa << ','
        << r.achieved << ',' << r.bound << ',' << (r.pass ? "true" : "false") << '\n';
  return out.str();
}

std::string toMarkdown(const BatchSummary& summary) {
  std::ostringstream out;
  out << "| instance_id | model | agent | kappa | achieved | bound | pass | note | checksum |\n"
      << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : summary.rows) {
    char checksum[20];
    std::snprintf(checksum, sizeof checksum, "%016" PRIx64, r.checksum);
    out << "| " << r.instanceId << " | " << toString(r.algorithm) << " | " << r.agent << " | "
        << r.kappa << " | " << r.achieved << " | " << r.bound << " | "
        << (r.pass ? "pass" : "FAIL") << " | " << r.note << " | " << checksum << " |\n";
  }
  out << "\n" << summary.rows.size() - summary.failures << " of " << summary.rows.size()
      << " rows pass\n";
  return out.str();
}

}  // namespace binmms::harness
