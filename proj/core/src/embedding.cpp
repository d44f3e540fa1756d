#include "tcmpipe/quality/embedding.hpp"

#include "tcmpipe/util/errors.hpp"
#include "tcmpipe/util/hash.hpp"
#include "tcmpipe/util/unicode.hpp"

#include <cmath>

namespace tcmpipe::quality {

EmbeddingVector EmbeddingVector::make(std::string doc_id, std::vector<double> values)
{
    EmbeddingVector v;
    v.doc_id = std::move(doc_id);
    double sq = 0.0;
    for (double x : values)
    {
        if (!std::isfinite(x))
        {
            fail(Errc::schema_error, "non-finite embedding value in document " + v.doc_id);
        }
        sq += x * x;
    }
    v.values = std::move(values);
    v.norm = std::sqrt(sq);
    return v;
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b)
{
    if (a.dim() != b.dim())
    {
        fail(Errc::dimension_mismatch,
             "dims " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    if (a.norm == 0.0 || b.norm == 0.0)
    {
        fail(Errc::zero_norm_vector, "cosine undefined for zero-norm vector");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
    {
        dot += a.values[i] * b.values[i];
    }
    return dot / (a.norm * b.norm);
}

EmbeddingVector trigram_embedding(const std::string& doc_id, std::string_view text, std::uint64_t seed,
                                  std::size_t dim)
{
    std::u32string cps = util::decode_utf8(text);
    std::vector<double> values(dim, 0.0);

    auto accumulate = [&](const char32_t* gram, std::size_t len) {
        std::uint64_t h = util::fnv1a64(&seed, sizeof(seed));
        h = util::fnv1a64(gram, len * sizeof(char32_t), h);
        std::size_t bucket = static_cast<std::size_t>(h % dim);
        double sign = ((h >> 63) & 1) != 0 ? -1.0 : 1.0;
        values[bucket] += sign;
    };

    if (cps.size() < 3)
    {
        if (!cps.empty())
        {
            accumulate(cps.data(), cps.size());
        }
    }
    else
    {
        for (std::size_t i = 0; i + 3 <= cps.size(); ++i)
        {
            accumulate(cps.data() + i, 3);
        }
    }

    // Signed counts can cancel; a non-empty document must embed to a nonzero
    // direction, so fall back to a single deterministic basis component.
    bool all_zero = true;
    for (double v : values)
    {
        if (v != 0.0)
        {
            all_zero = false;
            break;
        }
    }
    if (all_zero && !cps.empty())
    {
        std::uint64_t h = util::fnv1a64(cps.data(), cps.size() * sizeof(char32_t), seed ^ 0x9E3779B97F4A7C15ull);
        values[static_cast<std::size_t>(h % dim)] = 1.0;
    }
    return EmbeddingVector::make(doc_id, std::move(values));
}

namespace {

class BuiltinEmbedder final : public EmbeddingProvider {
  public:
    BuiltinEmbedder(const std::string& spec, std::uint64_t seed) : seed_(seed)
    {
        if (spec == "trigram")
        {
            dim_ = 64;
        }
        else if (spec.rfind("trigram:", 0) == 0)
        {
            dim_ = static_cast<std::size_t>(std::stoul(spec.substr(8)));
            if (dim_ == 0)
            {
                fail(Errc::schema_error, "trigram embedder dim must be positive");
            }
        }
        else
        {
            fail(Errc::schema_error, "unknown builtin embedder: " + spec);
        }
    }

    std::vector<EmbeddingVector> embed(const std::vector<corpus::RawDocument>& docs) override
    {
        std::vector<EmbeddingVector> out;
        out.reserve(docs.size());
        for (const auto& doc : docs)
        {
            out.push_back(trigram_embedding(doc.id, doc.text, seed_, dim_));
        }
        return out;
    }

  private:
    std::uint64_t seed_;
    std::size_t dim_ = 64;
};

class ExchangeEmbedder final : public EmbeddingProvider {
  public:
    ExchangeEmbedder(ProviderConfig config, std::uint64_t seed) : config_(std::move(config)), seed_(seed) {}

    std::vector<EmbeddingVector> embed(const std::vector<corpus::RawDocument>& docs) override
    {
        std::vector<nlohmann::json> requests;
        requests.reserve(docs.size());
        for (const auto& doc : docs)
        {
            requests.push_back({{"id", doc.id}, {"text", doc.text}});
        }
        auto responses = run_file_exchange(config_, requests, seed_);
        std::vector<EmbeddingVector> out;
        out.reserve(docs.size());
        for (const auto& doc : docs)
        {
            auto it = responses.find(doc.id);
            if (it == responses.end())
            {
                fail(Errc::provider_failure, "embedder returned no line for document " + doc.id);
            }
            if (!it->second.contains("vector") || !it->second.at("vector").is_array())
            {
                fail(Errc::provider_failure, "embedder response for " + doc.id + " has no vector array");
            }
            out.push_back(EmbeddingVector::make(doc.id, it->second.at("vector").get<std::vector<double>>()));
        }
        return out;
    }

  private:
    ProviderConfig config_;
    std::uint64_t seed_;
};

} // namespace

std::unique_ptr<EmbeddingProvider> make_embedder(const ProviderConfig& config, std::uint64_t seed)
{
    if (config.mode == ProviderConfig::Mode::builtin)
    {
        return std::make_unique<BuiltinEmbedder>(config.builtin, seed);
    }
    return std::make_unique<ExchangeEmbedder>(config, seed);
}

} // namespace tcmpipe::quality
