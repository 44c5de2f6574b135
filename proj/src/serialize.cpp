#include "pcashrink/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "pcashrink/error.hpp"

namespace pcashrink {

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

namespace {

void write_array(std::ostringstream& out, std::span<const double> values) {
  out << '[';
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out << ", ";
    out << format_real(values[k]);
  }
  out << ']';
}

}  // namespace

std::string serialize_model(const PcaModel& model) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"pcashrink-model\",\n";
  out << "  \"version\": \"" << kToolkitVersion << "\",\n";
  out << "  \"n\": " << model.dim() << ",\n";
  out << "  \"degenerate\": " << (model.degenerate ? "true" : "false") << ",\n";
  out << "  \"mean\": ";
  write_array(out, model.mean);
  out << ",\n  \"eigenvalues\": ";
  write_array(out, model.eigenvalues);
  out << ",\n  \"components\": ";
  write_array(out, model.components.data());
  out << "\n}\n";
  return out.str();
}

PcaModel deserialize_model(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("model file: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != "pcashrink-model") {
      throw Error(ErrorCode::Parse, "model file: unexpected format tag");
    }
    const auto n = doc.at("n").get<std::size_t>();
    PcaModel model;
    model.mean = doc.at("mean").get<Vec>();
    model.eigenvalues = doc.at("eigenvalues").get<Vec>();
    model.degenerate = doc.value("degenerate", false);
    const auto flat = doc.at("components").get<Vec>();
    if (model.mean.size() != n || model.eigenvalues.size() != n || flat.size() != n * n) {
      throw Error(ErrorCode::Parse, "model file: array lengths disagree with n");
    }
    model.components = Mat(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) model.components(r, c) = flat[r * n + c];
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("model file: ") + e.what());
  }
}

}  // namespace pcashrink
