#pragma once

#include <string>
#include <vector>

#include "pcashrink/shrinkage.hpp"
#include "pcashrink/sweep.hpp"

namespace pcashrink {

/// |r| above this reads as a strong correlation in reports.
inline constexpr double kStrongCorrelation = 0.7;

/// Header: m,eigsum,mean_shrinkage,median_shrinkage,max_shrinkage,accuracy
std::string sweep_csv(const SweepResult& result);
std::string sweep_report_json(const SweepResult& result, const CorrelationSummary& summary);

/// Header: i,j,m,dist_original,dist_truncated,d_ij,r_ij
std::string records_csv(const std::vector<ShrinkageRecord>& records);

}  // namespace pcashrink
