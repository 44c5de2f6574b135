#include "pcashrink/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pcashrink/serialize.hpp"

namespace pcashrink {

namespace {

std::string json_string(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

void write_coefficient(std::ostringstream& out, const char* key,
                       const std::optional<double>& value, bool finding_two) {
  out << "    " << json_string(key) << ": {\"value\": ";
  if (value) {
    out << format_real(*value) << ", \"absent\": false";
    if (finding_two) {
      out << ", \"consistent_with_finding_2\": "
          << (std::abs(*value) < kStrongCorrelation ? "true" : "false");
    } else {
      out << ", \"strong\": " << (*value > kStrongCorrelation ? "true" : "false");
    }
  } else {
    out << "null, \"absent\": true";
  }
  out << '}';
}

}  // namespace

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "m,eigsum,mean_shrinkage,median_shrinkage,max_shrinkage,accuracy\n";
  for (const auto& row : result.rows) {
    out << row.m << ',' << format_real(row.eigsum) << ',' << format_real(row.mean_shrinkage) << ','
        << format_real(row.median_shrinkage) << ',' << format_real(row.max_shrinkage) << ','
        << format_real(row.accuracy) << '\n';
  }
  return out.str();
}

std::string sweep_report_json(const SweepResult& result, const CorrelationSummary& summary) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"version\": " << json_string(kToolkitVersion) << ",\n";
  out << "  \"dataset\": " << json_string(result.dataset_name) << ",\n";
  out << "  \"samples\": " << result.samples << ",\n";
  out << "  \"features\": " << result.features << ",\n";
  out << "  \"seed\": " << result.seed << ",\n";
  out << "  \"classifier\": " << json_string(result.classifier_config) << ",\n";
  out << "  \"pairs_per_m\": " << result.pair_count << ",\n";
  out << "  \"pairs_sampled\": " << (result.pairs_sampled ? "true" : "false") << ",\n";
  out << "  \"rows\": [\n";
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    const auto& row = result.rows[r];
    out << "    {\"m\": " << row.m << ", \"eigsum\": " << format_real(row.eigsum)
        << ", \"mean_shrinkage\": " << format_real(row.mean_shrinkage)
        << ", \"median_shrinkage\": " << format_real(row.median_shrinkage)
        << ", \"max_shrinkage\": " << format_real(row.max_shrinkage)
        << ", \"accuracy\": " << format_real(row.accuracy)
        << ", \"violations\": " << row.violations << '}'
        << (r + 1 < result.rows.size() ? "," : "") << '\n';
  }
  out << "  ],\n";
  out << "  \"correlation\": {\n";
  out << "    \"sample_count\": " << summary.sample_count << ",\n";
  write_coefficient(out, "eigsum_shrinkage", summary.eigsum_shrinkage, false);
  out << ",\n";
  write_coefficient(out, "eigsum_accuracy", summary.eigsum_accuracy, true);
  out << ",\n";
  write_coefficient(out, "shrinkage_accuracy", summary.shrinkage_accuracy, true);
  out << "\n  }\n}\n";
  return out.str();
}

std::string records_csv(const std::vector<ShrinkageRecord>& records) {
  std::ostringstream out;
  out << "i,j,m,dist_original,dist_truncated,d_ij,r_ij\n";
  for (const auto& rec : records) {
    out << rec.i << ',' << rec.j << ',' << rec.m << ',' << format_real(rec.dist_original) << ','
        << format_real(rec.dist_truncated) << ',' << format_real(rec.shrinkage) << ','
        << format_real(rec.reconstruction_error) << '\n';
  }
  return out.str();
}

}  // namespace pcashrink
