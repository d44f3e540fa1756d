#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace tcmpipe::quality {

// External providers (scorer, embedder, model) speak one file-exchange
// protocol: the pipeline writes a JSON-Lines request file, the provider
// produces a JSON-Lines response file keyed by id. A provider is either a
// configured subprocess command, a pre-computed response file, or one of the
// built-in stubs used for offline runs and tests.
struct ProviderConfig {
    enum class Mode { command, response_file, builtin };
    Mode mode = Mode::builtin;

    // command mode: run via /bin/sh -c after substituting {in}, {out}, {seed}.
    std::string command;
    // response_file mode: path of the pre-computed response JSONL.
    std::string response_path;
    // builtin mode: stub spec, e.g. "constant-score:5", "trigram-embedder",
    // "uniform-random", "fixed-reply:B", "echo-prompt".
    std::string builtin;

    int timeout_ms = 60000;
    int retries = 0;
    std::string workdir; // scratch dir for request/response files (command mode)
};

ProviderConfig provider_config_from_json(const nlohmann::json& row, const std::string& path_hint);

// Runs one exchange and returns the response rows keyed by id. Rows without an
// "id" field, transport failures, timeouts, and nonzero exits raise
// Errc::provider_failure (after the configured retries).
std::unordered_map<std::string, nlohmann::json>
run_file_exchange(const ProviderConfig& config, const std::vector<nlohmann::json>& requests, std::uint64_t seed);

} // namespace tcmpipe::quality
