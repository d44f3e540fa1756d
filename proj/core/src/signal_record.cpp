#include "tcmpipe/signal/record.hpp"

#include "tcmpipe/util/errors.hpp"
#include "tcmpipe/util/jsonl.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

namespace tcmpipe::signal {

const char* modality_name(Modality m)
{
    switch (m)
    {
    case Modality::audio:
        return "audio";
    case Modality::pulse:
        return "pulse";
    case Modality::smell:
        return "smell";
    case Modality::ecg:
        return "ecg";
    }
    return "audio";
}

Modality modality_from_name(const std::string& name)
{
    if (name == "audio")
    {
        return Modality::audio;
    }
    if (name == "pulse")
    {
        return Modality::pulse;
    }
    if (name == "smell")
    {
        return Modality::smell;
    }
    if (name == "ecg")
    {
        return Modality::ecg;
    }
    fail(Errc::schema_error, "unknown modality: " + name);
}

const char* modality_tag(Modality m)
{
    switch (m)
    {
    case Modality::audio:
        return "";
    case Modality::pulse:
        return "<Pulse>";
    case Modality::smell:
        return "<Smell>";
    case Modality::ecg:
        return "<ECG>";
    }
    return "";
}

SignalRecord flatten_channels(std::string id, Modality modality, double native_rate,
                              const std::vector<std::vector<double>>& channels,
                              std::optional<std::string> label)
{
    if (channels.empty())
    {
        fail(Errc::too_short, "record " + id + " has no channels");
    }
    SignalRecord rec;
    rec.id = std::move(id);
    rec.modality = modality;
    rec.native_rate = native_rate;
    rec.label = std::move(label);
    for (const auto& channel : channels)
    {
        if (channel.empty())
        {
            fail(Errc::too_short, "record " + rec.id + " has an empty channel");
        }
        double mean = 0.0;
        for (double x : channel)
        {
            mean += x;
        }
        mean /= static_cast<double>(channel.size());
        double var = 0.0;
        for (double x : channel)
        {
            var += (x - mean) * (x - mean);
        }
        double sd = std::sqrt(var / static_cast<double>(channel.size()));
        for (double x : channel)
        {
            rec.samples.push_back(sd > 0.0 ? (x - mean) / sd : 0.0);
        }
    }
    return rec;
}

std::string tag_modality(const SignalRecord& rec, std::string_view text)
{
    std::string out = modality_tag(rec.modality);
    out.append(text);
    return out;
}

SignalRecord signal_from_json(const nlohmann::json& row)
{
    if (!row.is_object() || !row.contains("id") || !row.contains("modality") || !row.contains("native_rate"))
    {
        fail(Errc::schema_error, "signal row needs {id, modality, native_rate, samples|channels}");
    }
    std::string id = row.at("id").get<std::string>();
    Modality modality = modality_from_name(row.at("modality").get<std::string>());
    double rate = row.at("native_rate").get<double>();
    if (!(rate > 0.0))
    {
        fail(Errc::schema_error, "native_rate must be positive in record " + id);
    }
    std::optional<std::string> label;
    if (row.contains("label") && !row.at("label").is_null())
    {
        label = row.at("label").get<std::string>();
    }
    if (row.contains("channels"))
    {
        return flatten_channels(std::move(id), modality, rate,
                                row.at("channels").get<std::vector<std::vector<double>>>(), std::move(label));
    }
    if (!row.contains("samples"))
    {
        fail(Errc::schema_error, "signal row " + id + " has neither samples nor channels");
    }
    SignalRecord rec;
    rec.id = std::move(id);
    rec.modality = modality;
    rec.native_rate = rate;
    rec.samples = row.at("samples").get<std::vector<double>>();
    rec.label = std::move(label);
    if (rec.samples.empty())
    {
        fail(Errc::schema_error, "signal row " + rec.id + " has no samples");
    }
    return rec;
}

nlohmann::json signal_to_json(const SignalRecord& rec)
{
    nlohmann::json row = {{"id", rec.id},
                          {"modality", modality_name(rec.modality)},
                          {"native_rate", rec.native_rate},
                          {"samples", rec.samples}};
    if (rec.label)
    {
        row["label"] = *rec.label;
    }
    return row;
}

std::vector<SignalRecord> read_signals_jsonl(const std::filesystem::path& path)
{
    std::vector<SignalRecord> records;
    util::for_each_jsonl(path, [&](const nlohmann::json& row, std::size_t) {
        records.push_back(signal_from_json(row));
    });
    return records;
}

namespace {

constexpr char kMagic[8] = {'F', '3', '2', 'S', 'I', 'G', '0', '1'};

} // namespace

void write_signals_binary(const std::filesystem::path& path, const std::vector<SignalRecord>& records)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
    {
        fail(Errc::io_error, "cannot write " + path.string());
    }
    out.write(kMagic, sizeof(kMagic));
    std::uint64_t total = 0;
    for (const auto& rec : records)
    {
        total += rec.samples.size();
    }
    out.write(reinterpret_cast<const char*>(&total), sizeof(total));

    nlohmann::json sidecar = nlohmann::json::array();
    std::uint64_t offset = 0;
    for (const auto& rec : records)
    {
        std::vector<float> f32(rec.samples.begin(), rec.samples.end());
        out.write(reinterpret_cast<const char*>(f32.data()),
                  static_cast<std::streamsize>(f32.size() * sizeof(float)));
        nlohmann::json entry = {{"id", rec.id},
                                {"modality", modality_name(rec.modality)},
                                {"native_rate", rec.native_rate},
                                {"offset", offset},
                                {"length", rec.samples.size()}};
        if (rec.label)
        {
            entry["label"] = *rec.label;
        }
        sidecar.push_back(entry);
        offset += rec.samples.size();
    }
    if (!out)
    {
        fail(Errc::io_error, "short write to " + path.string());
    }
    out.close();
    util::write_text_file_atomic(path.string() + ".json", sidecar.dump(2) + "\n");
}

std::vector<SignalRecord> read_signals_binary(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        fail(Errc::io_error, "cannot open " + path.string());
    }
    char magic[8];
    std::uint64_t total = 0;
    in.read(magic, sizeof(magic));
    in.read(reinterpret_cast<char*>(&total), sizeof(total));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    {
        fail(Errc::io_error, path.string() + " is not a signal container");
    }
    std::vector<float> data(total);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(total * sizeof(float)));
    if (!in)
    {
        fail(Errc::io_error, "truncated signal container " + path.string());
    }

    nlohmann::json sidecar = nlohmann::json::parse(util::read_text_file(path.string() + ".json"));
    std::vector<SignalRecord> records;
    for (const auto& entry : sidecar)
    {
        SignalRecord rec;
        rec.id = entry.at("id").get<std::string>();
        rec.modality = modality_from_name(entry.at("modality").get<std::string>());
        rec.native_rate = entry.at("native_rate").get<double>();
        if (entry.contains("label"))
        {
            rec.label = entry.at("label").get<std::string>();
        }
        std::uint64_t offset = entry.at("offset").get<std::uint64_t>();
        std::uint64_t length = entry.at("length").get<std::uint64_t>();
        if (offset + length > total)
        {
            fail(Errc::io_error, "sidecar slice out of range in " + path.string());
        }
        rec.samples.assign(data.begin() + static_cast<std::ptrdiff_t>(offset),
                           data.begin() + static_cast<std::ptrdiff_t>(offset + length));
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace tcmpipe::signal
