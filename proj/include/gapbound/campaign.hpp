#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "gapbound/report.hpp"

namespace gapbound {

struct CampaignConfig {
    long trials = 100;
    long max_degree = 6;
    long coeff_bound = 10;
    long order = 64;
    std::vector<std::string> parameter_family{"t"};
    std::uint64_t seed = 1;
    BigRational point;
    /// Replaces the random draw in every trial.
    std::optional<std::string> forced_f;
    long lemma_n = 3;
    unsigned prop_n = 3;
};

/// Throws ConfigError on invalid settings.
void validate(const CampaignConfig& cfg);

/// Uniform random rational function with numerator and denominator degrees in
/// [0, max_degree] and integer coefficients in [-coeff_bound, coeff_bound].
RationalFunction draw_rational_function(std::mt19937_64& rng, long max_degree, long coeff_bound);

/// Why a draw cannot be analyzed at p for some parameter, or nullopt if it can.
std::optional<std::string> degeneracy(const RationalFunction& f, const std::vector<RationalFunction>& family,
                                      const BigRational& p);

struct FamilyStats {
    std::string x;
    long verified = 0;      // (f, x) pairs run through the full pipeline
    long rows = 0;          // individual a_n comparisons
    std::optional<long> min_slack;
    std::optional<long> max_slack;
    long sharp_trials = 0;
    long lemma_checks = 0;
    long prop_checks = 0;
    RiemannRochCheck rr{0, 0, false};
};

struct CampaignFailure {
    long trial;
    std::string f;
    std::string x;
    std::string error;
};

struct CampaignResult {
    CampaignConfig config;
    std::vector<FamilyStats> families;
    long redraws = 0;
    std::vector<CampaignFailure> failures;
    bool pass() const;
};

/// Deterministic for a fixed config: trials are drawn in order and degenerate
/// draws are redrawn so every trial counts a completed verification.
CampaignResult run_campaign(const CampaignConfig& cfg);

nlohmann::ordered_json to_json(const CampaignResult& result);
std::string render(const CampaignResult& result, ReportFormat format);

}  // namespace gapbound
