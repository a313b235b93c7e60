#pragma once

#include "crasze/pipeline.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crasze {

struct RunRecord {
    std::string instance;
    std::string algorithm;
    std::uint64_t seed = 0;
    double budget = 0.0;
    double prize = 0.0;
    double cost = 0.0;
    double runtime_s = 0.0;
    bool truncated = false;
    bool ok = true;
    std::string error;  // set when ok is false; such runs carry no stats
};

/// Solves every (instance, seed) pair once, fanned out over `threads`
/// workers. A failing run becomes a record with ok = false instead of
/// aborting the batch. Records come back ordered by (instance position,
/// seed position) regardless of scheduling.
std::vector<RunRecord> run_batch(const std::vector<Instance>& instances, const SolveOptions& base,
                                 const std::vector<std::uint64_t>& seeds, int threads);

/// Per-(instance, algorithm) table of means and population standard
/// deviations over the successful records, in first-appearance order.
/// Header: instance,algorithm,budget,prize_avg,prize_sd,cost_avg,cost_sd,
/// time_avg_s,time_sd_s.
std::string summary_csv(const std::vector<RunRecord>& records);

struct SettingObservation {
    double cost = 0.0;
    double time_s = 0.0;
};

/// Relative quality of parameter settings over a shared instance set. Per
/// instance, cost and time are min-max normalized across settings (best 1,
/// worst 0, flat term 1) and averaged with equal weight; a setting's score is
/// the sum over instances, so it lies in [0, number of instances].
/// by_setting[s][k] is setting s observed on instance k; rows must have equal
/// length and there must be at least two settings.
std::vector<double> score_settings(const std::vector<std::vector<SettingObservation>>& by_setting);

}  // namespace crasze
