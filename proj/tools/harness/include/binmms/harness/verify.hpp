#ifndef BINMMS_HARNESS_VERIFY_HPP
#define BINMMS_HARNESS_VERIFY_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "binmms/model.hpp"

namespace binmms::harness {

enum class Algorithm { CoverCardinal, CoverOrdinal, PackOrdinal };

std::string_view toString(Algorithm algorithm);
Algorithm parseAlgorithm(std::string_view text);

struct ReportRow {
  std::string instanceId;
  Algorithm algorithm = Algorithm::CoverCardinal;
  AgentId agent = 0;
  std::size_t kappa = 0;
  std::int64_t achieved = 0;
  std::int64_t bound = 0;
  bool pass = false;
  /// oracle-verified, witness-verified, structural failures and similar.
  std::string note;
  std::uint64_t checksum = 0;
};

struct VerificationReport {
  std::vector<ReportRow> rows;
  [[nodiscard]] bool pass() const;
};

struct VerifyOptions {
  std::string instanceId = "instance";
  /// Oracle item cap: exact kappa over all items and exact per-bundle values.
  std::size_t cap = 12;
};

/// Kappa per agent: the exact oracle when itemCount <= cap, otherwise the
/// certificate value after checking its parts (each part's oracle value
/// reaches kappa) and the total-size bound. nullopt when the certificate
/// fails those checks; `note` then says why.
std::optional<std::size_t> certifiedKappa(const Instance& instance, AgentId agent, Model model,
                                          const MmsCertificate* certificate,
                                          const VerifyOptions& options, std::string& note);

/// Exactly kappa witness bins partitioning A_i, each of original-size total >= alpha.
VerificationReport verifyCmmsCover(const Instance& instance,
                                   const std::vector<MmsCertificate>& certificates,
                                   const Allocation& allocation,
                                   const std::vector<BinPartition>& witnesses,
                                   const Rational& alpha, const VerifyOptions& options = {});

/// v_i(A_i) >= ceil(3/4 kappa - 7/4); exact when |A_i| <= cap, otherwise the
/// count of witness bins reaching 1 (when witnesses are supplied).
VerificationReport verifyOmmsCover(const Instance& instance,
                                   const std::vector<MmsCertificate>& certificates,
                                   const Allocation& allocation,
                                   const std::vector<BinPartition>* witnesses = nullptr,
                                   const VerifyOptions& options = {});

/// Witness bins partition A_i, every total <= 1, count <= floor(4/3 kappa + 4/3),
/// and exact c_i(A_i) within the bound when |A_i| <= cap.
VerificationReport verifyOmmsPack(const Instance& instance,
                                  const std::vector<MmsCertificate>& certificates,
                                  const Allocation& allocation,
                                  const std::vector<BinPartition>& witnesses,
                                  const VerifyOptions& options = {});

/// Solves with `algorithm` and verifies the result. Solver exceptions become
/// failing rows.
VerificationReport solveAndVerify(const Instance& instance, Algorithm algorithm,
                                  const VerifyOptions& options = {});

struct BatchConfig {
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::size_t maxItems = 10;
  std::int64_t denominator = 12;
  std::vector<Algorithm> algorithms{Algorithm::CoverCardinal, Algorithm::CoverOrdinal,
                                    Algorithm::PackOrdinal};
  std::size_t cap = 12;
  std::size_t jobs = 1;
  std::optional<std::filesystem::path> csvPath;
  std::optional<std::filesystem::path> markdownPath;
};

struct BatchSummary {
  std::vector<ReportRow> rows;  // sorted by instance id, algorithm, agent
  std::size_t failures = 0;
  [[nodiscard]] int exitCode() const { return failures == 0 ? 0 : 1; }
};

/// Sorts and counts rows.
BatchSummary summarize(std::vector<ReportRow> rows);

/// Runs the generator sweep, writes the requested tables, returns the summary.
/// Throws std::runtime_error naming the file on I/O failure.
BatchSummary runBatch(const BatchConfig& config);

std::string toCsv(const BatchSummary& summary);
std::string toMarkdown(const BatchSummary& summary);

}  // namespace binmms::harness

#endif  // BINMMS_HARNESS_VERIFY_HPP
