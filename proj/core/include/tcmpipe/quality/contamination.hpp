#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tcmpipe::quality {

struct RemovalRecord {
    std::string eval_id;
    std::string train_id;
    std::size_t eval_offset = 0;  // character offset of the shared window in the eval item
    std::size_t train_offset = 0; // character offset in the training document
};

struct ContaminationResult {
    std::vector<std::size_t> kept_indices; // into the eval input order
    std::vector<RemovalRecord> removed;
};

// Removes every eval item that shares at least one k-character exact substring
// with any training text. Candidate windows are found with a 64-bit polynomial
// rolling hash over Unicode scalar values; every hash hit is verified by exact
// character comparison, so collisions never cause a false removal.
class ContaminationFilter {
  public:
    explicit ContaminationFilter(std::size_t k = 64);

    void add_training_text(const std::string& doc_id, std::string_view text_utf8);

    struct EvalItem {
        std::string id;
        std::string text;
    };

    ContaminationResult filter(const std::vector<EvalItem>& items) const;

    std::size_t window() const
    {
        return k_;
    }

  private:
    struct TrainRef {
        std::uint32_t doc = 0;
        std::uint32_t offset = 0;
    };

    std::size_t k_;
    std::uint64_t base_power_ = 1; // base^(k-1), for rolling the leading scalar out
    std::vector<std::string> train_ids_;
    std::vector<std::u32string> train_texts_;
    std::unordered_map<std::uint64_t, std::vector<TrainRef>> windows_;

    bool find_match(const std::u32string& text, std::size_t& eval_offset, TrainRef& hit) const;
};

} // namespace tcmpipe::quality
