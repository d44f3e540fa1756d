#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tcmpipe::signal {

enum class Modality { audio, pulse, smell, ecg };

const char* modality_name(Modality m);
Modality modality_from_name(const std::string& name);

// Literal tag prepended to instruction text for non-audio signals; empty for
// audio.
const char* modality_tag(Modality m);

struct SignalRecord {
    std::string id;
    Modality modality = Modality::audio;
    double native_rate = 0.0; // samples per second
    std::vector<double> samples;
    std::optional<std::string> label;
};

// Multi-channel sources (e.g. a 1153x9 sensor matrix) are per-channel
// z-normalized, then concatenated in declared channel order.
SignalRecord flatten_channels(std::string id, Modality modality, double native_rate,
                              const std::vector<std::vector<double>>& channels,
                              std::optional<std::string> label = std::nullopt);

// Returns tag + text for non-audio records, text unchanged for audio.
std::string tag_modality(const SignalRecord& rec, std::string_view text);

// JSONL row: {id, modality, native_rate, samples | channels, label?}.
SignalRecord signal_from_json(const nlohmann::json& row);
nlohmann::json signal_to_json(const SignalRecord& rec);

std::vector<SignalRecord> read_signals_jsonl(const std::filesystem::path& path);

// Binary container for large corpora: little-endian f32 samples with a JSON
// sidecar (<path>.json) describing each record's slice.
void write_signals_binary(const std::filesystem::path& path, const std::vector<SignalRecord>& records);
std::vector<SignalRecord> read_signals_binary(const std::filesystem::path& path);

} // namespace tcmpipe::signal
