#pragma once

#include <string>

#include "pcashrink/pca.hpp"

namespace pcashrink {

inline constexpr const char* kToolkitVersion = "0.3.0";

/// Formats with 17 significant digits so the text round-trips exactly.
std::string format_real(double value);

/// JSON document with n, mean, eigenvalues, row-major components, the
/// degeneracy flag, and the toolkit version. Byte-stable for equal models.
std::string serialize_model(const PcaModel& model);
/// Throws parse on malformed or inconsistent documents.
PcaModel deserialize_model(const std::string& text);

}  // namespace pcashrink
