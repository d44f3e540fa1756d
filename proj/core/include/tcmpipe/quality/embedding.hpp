#pragma once

#include "tcmpipe/corpus/document.hpp"
#include "tcmpipe/quality/provider.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tcmpipe::quality {

struct EmbeddingVector {
    std::string doc_id;
    std::vector<double> values;
    double norm = 0.0; // cached Euclidean norm

    static EmbeddingVector make(std::string doc_id, std::vector<double> values);

    std::size_t dim() const
    {
        return values.size();
    }
};

// Cosine via the cached norms. Throws Errc::dimension_mismatch and
// Errc::zero_norm_vector.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

// Deterministic offline embedder: character 3-grams feature-hashed into `dim`
// signed buckets. Stands in for the external embedding model in property
// tests and offline runs.
EmbeddingVector trigram_embedding(const std::string& doc_id, std::string_view text, std::uint64_t seed,
                                  std::size_t dim = 64);

class EmbeddingProvider {
  public:
    virtual ~EmbeddingProvider() = default;
    virtual std::vector<EmbeddingVector> embed(const std::vector<corpus::RawDocument>& docs) = 0;
};

// Built-ins: "trigram" (optionally "trigram:<dim>"). command / response_file
// providers exchange {id, text} -> {id, vector}.
std::unique_ptr<EmbeddingProvider> make_embedder(const ProviderConfig& config, std::uint64_t seed = 0);

} // namespace tcmpipe::quality
