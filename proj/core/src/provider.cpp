#include "tcmpipe/quality/provider.hpp"

#include "tcmpipe/util/errors.hpp"
#include "tcmpipe/util/jsonl.hpp"

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <thread>

namespace tcmpipe::quality {

namespace {

std::string substitute(std::string cmd, const std::string& key, const std::string& value)
{
    std::size_t pos = 0;
    while ((pos = cmd.find(key, pos)) != std::string::npos)
    {
        cmd.replace(pos, key.size(), value);
        pos += value.size();
    }
    return cmd;
}

// Runs `command` through /bin/sh with a wall-clock timeout. Returns the exit
// status; a timed-out child is killed and reported as failure.
bool run_command(const std::string& command, int timeout_ms, std::string& error)
{
    pid_t pid = fork();
    if (pid < 0)
    {
        error = "fork failed";
        return false;
    }
    if (pid == 0)
    {
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }

    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    for (;;)
    {
        int status = 0;
        pid_t done = waitpid(pid, &status, WNOHANG);
        if (done == pid)
        {
            if (WIFEXITED(status) && WEXITSTATUS(status) == 0)
            {
                return true;
            }
            error = "provider command exited with status " +
                    std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
            return false;
        }
        if (done < 0)
        {
            error = "waitpid failed";
            return false;
        }
        if (std::chrono::steady_clock::now() >= deadline)
        {
            kill(pid, SIGKILL);
            waitpid(pid, &status, 0);
            error = "provider command timed out after " + std::to_string(timeout_ms) + " ms";
            return false;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
}

std::unordered_map<std::string, nlohmann::json> load_responses(const std::filesystem::path& path)
{
    std::unordered_map<std::string, nlohmann::json> by_id;
    util::for_each_jsonl(path, [&](const nlohmann::json& row, std::size_t lineno) {
        if (!row.is_object() || !row.contains("id"))
        {
            fail(Errc::provider_failure,
                 "response line " + std::to_string(lineno) + " in " + path.string() + " has no id");
        }
        by_id[row.at("id").get<std::string>()] = row;
    });
    return by_id;
}

} // namespace

ProviderConfig provider_config_from_json(const nlohmann::json& row, const std::string& path_hint)
{
    if (!row.is_object())
    {
        fail(Errc::schema_error, path_hint + ": provider config must be an object");
    }
    ProviderConfig config;
    for (const auto& [key, value] : row.items())
    {
        if (key == "mode")
        {
            std::string mode = value.get<std::string>();
            if (mode == "command")
            {
                config.mode = ProviderConfig::Mode::command;
            }
            else if (mode == "response_file")
            {
                config.mode = ProviderConfig::Mode::response_file;
            }
            else if (mode == "builtin")
            {
                config.mode = ProviderConfig::Mode::builtin;
            }
            else
            {
                fail(Errc::schema_error, path_hint + ".mode: unknown mode '" + mode + "'");
            }
        }
        else if (key == "command")
        {
            config.command = value.get<std::string>();
        }
        else if (key == "response_path")
        {
            config.response_path = value.get<std::string>();
        }
        else if (key == "builtin")
        {
            config.builtin = value.get<std::string>();
        }
        else if (key == "timeout_ms")
        {
            config.timeout_ms = value.get<int>();
            if (config.timeout_ms <= 0)
            {
                fail(Errc::schema_error, path_hint + ".timeout_ms must be positive");
            }
        }
        else if (key == "retries")
        {
            config.retries = value.get<int>();
            if (config.retries < 0)
            {
                fail(Errc::schema_error, path_hint + ".retries must be >= 0");
            }
        }
        else if (key == "workdir")
        {
            config.workdir = value.get<std::string>();
        }
        else
        {
            fail(Errc::schema_error, path_hint + ": unknown key '" + key + "'");
        }
    }
    if (config.mode == ProviderConfig::Mode::command && config.command.empty())
    {
        fail(Errc::schema_error, path_hint + ": command mode needs a command");
    }
    if (config.mode == ProviderConfig::Mode::response_file && config.response_path.empty())
    {
        fail(Errc::schema_error, path_hint + ": response_file mode needs response_path");
    }
    if (config.mode == ProviderConfig::Mode::builtin && config.builtin.empty())
    {
        fail(Errc::schema_error, path_hint + ": builtin mode needs a builtin spec");
    }
    return config;
}

std::unordered_map<std::string, nlohmann::json>
run_file_exchange(const ProviderConfig& config, const std::vector<nlohmann::json>& requests, std::uint64_t seed)
{
    if (config.mode == ProviderConfig::Mode::response_file)
    {
        return load_responses(config.response_path);
    }
    if (config.mode != ProviderConfig::Mode::command)
    {
        fail(Errc::provider_failure, "builtin providers do not use the file exchange");
    }

    std::filesystem::path workdir = config.workdir.empty() ? std::filesystem::temp_directory_path()
                                                           : std::filesystem::path(config.workdir);
    std::filesystem::create_directories(workdir);
    auto stamp = std::to_string(static_cast<long long>(getpid())) + "_" + std::to_string(seed);
    std::filesystem::path request_path = workdir / ("provider_request_" + stamp + ".jsonl");
    std::filesystem::path response_path = workdir / ("provider_response_" + stamp + ".jsonl");

    util::write_jsonl(request_path, requests);

    std::string command = config.command;
    command = substitute(command, "{in}", request_path.string());
    command = substitute(command, "{out}", response_path.string());
    command = substitute(command, "{seed}", std::to_string(seed));

    std::string error;
    int attempts = config.retries + 1;
    for (int attempt = 0; attempt < attempts; ++attempt)
    {
        std::error_code ec;
        std::filesystem::remove(response_path, ec);
        if (run_command(command, config.timeout_ms, error) && std::filesystem::exists(response_path))
        {
            auto responses = load_responses(response_path);
            std::filesystem::remove(request_path, ec);
            std::filesystem::remove(response_path, ec);
            return responses;
        }
        if (error.empty())
        {
            error = "provider produced no response file";
        }
    }
    fail(Errc::provider_failure, error + " (command: " + command + ")");
}

} // namespace tcmpipe::quality
