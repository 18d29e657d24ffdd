#pragma once

#include "anfis/fis.hpp"

#include <map>
#include <string>

namespace anfis {

/// Model-file metadata kept alongside the FIS so a saved model cannot
/// be applied with the wrong windowing.
struct ModelMetadata {
    int lags = 0;
    std::string input_order = "oldest-first";
    std::map<std::string, std::string> extra; // free-form training summary
};

struct LoadedModel {
    SugenoFis fis;
    ModelMetadata meta;
};

/// Serializes the model to a versioned line-based text format with
/// full-precision scalars and a trailing content checksum.
void save_model(const std::string& path, const SugenoFis& fis, const ModelMetadata& meta);

std::string serialize_model(const SugenoFis& fis, const ModelMetadata& meta);

/// Throws DataError on version mismatch, checksum mismatch, or any
/// malformed or truncated section.
LoadedModel load_model(const std::string& path);

LoadedModel parse_model(const std::string& text);

} // namespace anfis
