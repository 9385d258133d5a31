#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "binmms/cover_cardinal.hpp"
#include "binmms/cover_ordinal.hpp"
#include "binmms/errors.hpp"
#include "binmms/harness/generators.hpp"
#include "binmms/harness/json_io.hpp"
#include "binmms/harness/verify.hpp"
#include "binmms/mms.hpp"
#include "binmms/pack_ordinal.hpp"

namespace {

using namespace binmms;
using namespace binmms::harness;

constexpr int kPass = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::string input;
  std::string output;
  std::string certificates;
  std::uint64_t seed = 1;
  std::size_t cap = 12;
  std::string alpha = "2/3";
};

void emit(const Json& json, const std::string& output) {
  if (output.empty() || output == "-") std::cout << json.dump(2) << '\n';
  else writeJsonFile(output, json);
}

void printReport(const VerificationReport& report) {
  BatchSummary summary = summarize(report.rows);
  std::cerr << toMarkdown(summary);
}

SearchLimits limitsFor(const Common& c, const Instance& instance) {
  SearchLimits limits;
  limits.maxMmsItems = c.cap;
  limits.maxMmsAgents = std::max(limits.maxMmsAgents, instance.agentCount());
  return limits;
}

std::optional<std::vector<MmsCertificate>> loadCertificates(const Common& c) {
  if (c.certificates.empty()) return std::nullopt;
  return certificatesFromJson(readJsonFile(c.certificates));
}

int solve(Algorithm algorithm, const Common& c) {
  const Instance instance = instanceFromJson(readJsonFile(c.input));
  const auto certs = loadCertificates(c);
  const auto* certPtr = certs ? &*certs : nullptr;
  const SearchLimits limits = limitsFor(c, instance);
  VerifyOptions options{c.input, c.cap};

  Json out;
  VerificationReport report;
  switch (algorithm) {
    case Algorithm::CoverCardinal: {
      const auto sol = solveCoverCardinal(instance, certPtr, {EdgeMode::Constructive, limits});
      report = verifyCmmsCover(instance, sol.certificates, sol.allocation, sol.witnesses,
                               Rational::parse(c.alpha), options);
      out = {{"allocation", allocationToJson(sol.allocation)},
             {"witnesses", witnessesToJson(sol.witnesses)},
             {"certificates", certificatesToJson(sol.certificates)}};
      break;
    }
    case Algorithm::CoverOrdinal: {
      const auto sol = solveCoverOrdinal(instance, certPtr, limits);
      report = verifyOmmsCover(instance, sol.certificates, sol.allocation, &sol.witnesses, options);
      out = {{"allocation", allocationToJson(sol.allocation)},
             {"witnesses", witnessesToJson(sol.witnesses)},
             {"certificates", certificatesToJson(sol.certificates)}};
      break;
    }
    case Algorithm::PackOrdinal: {
      const auto sol = solvePackOrdinal(instance, certPtr, limits);
      report = verifyOmmsPack(instance, sol.certificates, sol.allocation, sol.witnesses, options);
      out = {{"allocation", allocationToJson(sol.allocation)},
             {"witnesses", witnessesToJson(sol.witnesses)},
             {"certificates", certificatesToJson(sol.certificates)}};
      break;
    }
  }
  out["algorithm"] = std::string(toString(algorithm));
  out["report"] = reportToJson(report);
  emit(out, c.output);
  printReport(report);
  return report.pass() ? kPass : kVerifyFailed;
}

int verify(const Common& c, const std::string& solutionPath) {
  const Instance instance = instanceFromJson(readJsonFile(c.input));
  const Json solution = readJsonFile(solutionPath);
  const Algorithm algorithm = parseAlgorithm(solution.at("algorithm").get<std::string>());
  const Allocation allocation = allocationFromJson(solution.at("allocation"));
  const auto witnesses = witnessesFromJson(solution.at("witnesses"), instance);
  std::vector<MmsCertificate> certs;
  if (const auto loaded = loadCertificates(c)) certs = *loaded;
  else if (solution.contains("certificates")) certs = certificatesFromJson(solution["certificates"]);
  VerifyOptions options{c.input, c.cap};

  VerificationReport report;
  switch (algorithm) {
    case Algorithm::CoverCardinal:
      report = verifyCmmsCover(instance, certs, allocation, witnesses, Rational::parse(c.alpha),
                               options);
      break;
    case Algorithm::CoverOrdinal:
      report = verifyOmmsCover(instance, certs, allocation, &witnesses, options);
      break;
    case Algorithm::PackOrdinal:
      report = verifyOmmsPack(instance, certs, allocation, witnesses, options);
      break;
  }
  emit(reportToJson(report), c.output);
  printReport(report);
  return report.pass() ? kPass : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximin-share allocation for bin covering and bin packing"};
  app.require_subcommand(1);
  Common c;

  auto addIo = [&](CLI::App* sub, bool needsInput) {
    auto* in = sub->add_option("--input", c.input, "Instance JSON");
    if (needsInput) in->required();
    sub->add_option("--output", c.output, "Output JSON path (stdout when omitted)");
    sub->add_option("--cap", c.cap, "Item cap for the exact oracles")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string family = "uniform";
  std::int64_t n = 2;
  std::int64_t m = 6;
  std::int64_t denominator = 12;
  std::string epsilon = "1/100";
  std::vector<std::string> sizes;
  gen->add_option("--family", family, "uniform | lone-divider | identical")
      ->check(CLI::IsMember({"uniform", "lone-divider", "identical"}))
      ->capture_default_str();
  gen->add_option("--n", n, "Agents")->capture_default_str();
  gen->add_option("--m", m, "Items")->capture_default_str();
  gen->add_option("--denominator", denominator, "Largest size denominator")->capture_default_str();
  gen->add_option("--epsilon", epsilon, "Lone-divider epsilon")->capture_default_str();
  gen->add_option("--sizes", sizes, "Identical-agent sizes, e.g. 1/2 1/3");
  gen->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  gen->add_option("--output", c.output, "Output JSON path (stdout when omitted)");
  gen->add_option("--certificates-out", c.certificates, "Lone-divider kappa = 3 certificates");

  auto* mms = app.add_subcommand("mms", "Exact MMS certificates for every agent");
  std::string model = "covering";
  addIo(mms, true);
  mms->add_option("--model", model, "covering | packing")
      ->check(CLI::IsMember({"covering", "packing"}))
      ->capture_default_str();

  auto* coverCardinal = app.add_subcommand("solve-cover-cardinal", "2/3-CMMS bin covering");
  auto* coverOrdinal = app.add_subcommand("solve-cover-ordinal", "Ordinal bin covering");
  auto* packOrdinal = app.add_subcommand("solve-pack-ordinal", "Ordinal bin packing");
  for (auto* sub : {coverCardinal, coverOrdinal, packOrdinal}) {
    addIo(sub, true);
    sub->add_option("--certificates", c.certificates, "MMS certificates JSON");
  }
  coverCardinal->add_option("--alpha", c.alpha, "Per-bin threshold to verify")->capture_default_str();

  auto* verifyCmd = app.add_subcommand("verify", "Re-verify a solution file");
  std::string solution;
  addIo(verifyCmd, true);
  verifyCmd->add_option("--solution", solution, "Solution JSON from a solve command")->required();
  verifyCmd->add_option("--certificates", c.certificates, "MMS certificates JSON");
  verifyCmd->add_option("--alpha", c.alpha, "Cardinal covering threshold")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Solve and verify a random corpus");
  BatchConfig batch;
  std::string csv;
  std::string markdown;
  std::vector<std::string> algorithms;
  bench->add_option("--count", batch.count, "Instances")->capture_default_str();
  bench->add_option("--seed", batch.seed, "First seed")->capture_default_str();
  bench->add_option("--max-items", batch.maxItems, "Largest m")->capture_default_str();
  bench->add_option("--denominator", batch.denominator, "Largest denominator")->capture_default_str();
  bench->add_option("--cap", batch.cap, "Oracle item cap")->capture_default_str();
  bench->add_option("--jobs", batch.jobs, "Instances solved concurrently")->capture_default_str();
  bench->add_option("--algorithm", algorithms, "cover-cardinal | cover-ordinal | pack-ordinal");
  bench->add_option("--output", csv, "CSV report path");
  bench->add_option("--markdown", markdown, "Markdown report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen) {
      GeneratorSpec spec;
      spec.family = family == "uniform"        ? Family::UniformRational
                    : family == "lone-divider" ? Family::LoneDivider
                                               : Family::IdenticalAgents;
      spec.n = n;
      spec.m = m;
      spec.seed = c.seed;
      spec.denominator = denominator;
      spec.epsilon = Rational::parse(epsilon);
      for (const auto& s : sizes) spec.sizes.push_back(Rational::parse(s));
      const Instance instance = generate(spec);
      Json out = instanceToJson(instance);
      emit(out, c.output);
      if (!c.certificates.empty()) {
        if (spec.family != Family::LoneDivider)
          throw std::invalid_argument("--certificates-out is only available for lone-divider");
        writeJsonFile(c.certificates, certificatesToJson(loneDividerCertificates(instance)));
      }
      return kPass;
    }
    if (*mms) {
      const Instance instance = instanceFromJson(readJsonFile(c.input));
      const SearchLimits limits = limitsFor(c, instance);
      std::vector<MmsCertificate> certs;
      for (AgentId i = 0; i < instance.agentCount(); ++i)
        certs.push_back(model == "covering" ? mmsCover(instance, i, limits)
                                            : mmsPack(instance, i, limits));
      emit(certificatesToJson(certs), c.output);
      return kPass;
    }
    if (*coverCardinal) return solve(Algorithm::CoverCardinal, c);
    if (*coverOrdinal) return solve(Algorithm::CoverOrdinal, c);
    if (*packOrdinal) return solve(Algorithm::PackOrdinal, c);
    if (*verifyCmd) return verify(c, solution);
    if (*bench) {
      if (!algorithms.empty()) {
        batch.algorithms.clear();
        for (const auto& a : algorithms) batch.algorithms.push_back(parseAlgorithm(a));
      }
      if (!csv.empty()) batch.csvPath = csv;
      if (!markdown.empty()) batch.markdownPath = markdown;
      const BatchSummary summary = runBatch(batch);
      if (csv.empty()) std::cout << toCsv(summary);
      std::cerr << summary.rows.size() - summary.failures << " of " << summary.rows.size()
                << " rows pass\n";
      return summary.exitCode();
    }
  } catch (const CapacityExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidSizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const binmms::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
