#include "tcmpipe/quality/contamination.hpp"

#include "tcmpipe/util/errors.hpp"
#include "tcmpipe/util/hash.hpp"
#include "tcmpipe/util/unicode.hpp"

namespace tcmpipe::quality {

namespace {

// Polynomial rolling hash base; arithmetic wraps mod 2^64.
constexpr std::uint64_t kBase = 1099511628211ull;

std::uint64_t hash_window(const char32_t* data, std::size_t k)
{
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < k; ++i)
    {
        h = h * kBase + static_cast<std::uint64_t>(data[i]);
    }
    return h;
}

} // namespace

ContaminationFilter::ContaminationFilter(std::size_t k) : k_(k)
{
    if (k_ < 1)
    {
        fail(Errc::invalid_threshold, "window length k must be >= 1");
    }
    for (std::size_t i = 0; i + 1 < k_; ++i)
    {
        base_power_ *= kBase;
    }
}

void ContaminationFilter::add_training_text(const std::string& doc_id, std::string_view text_utf8)
{
    std::u32string cps = util::decode_utf8(text_utf8);
    std::uint32_t doc = static_cast<std::uint32_t>(train_texts_.size());
    if (cps.size() >= k_)
    {
        std::uint64_t h = hash_window(cps.data(), k_);
        windows_[h].push_back({doc, 0});
        for (std::size_t i = 1; i + k_ <= cps.size(); ++i)
        {
            h = (h - static_cast<std::uint64_t>(cps[i - 1]) * base_power_) * kBase +
                static_cast<std::uint64_t>(cps[i + k_ - 1]);
            windows_[h].push_back({doc, static_cast<std::uint32_t>(i)});
        }
    }
    train_ids_.push_back(doc_id);
    train_texts_.push_back(std::move(cps));
}

bool ContaminationFilter::find_match(const std::u32string& text, std::size_t& eval_offset, TrainRef& hit) const
{
    if (text.size() < k_)
    {
        return false;
    }
    std::uint64_t h = hash_window(text.data(), k_);
    for (std::size_t i = 0;; ++i)
    {
        auto it = windows_.find(h);
        if (it != windows_.end())
        {
            for (const TrainRef& ref : it->second)
            {
                const std::u32string& train = train_texts_[ref.doc];
                if (train.compare(ref.offset, k_, text, i, k_) == 0)
                {
                    eval_offset = i;
                    hit = ref;
                    return true;
                }
            }
        }
        if (i + k_ >= text.size())
        {
            return false;
        }
        h = (h - static_cast<std::uint64_t>(text[i]) * base_power_) * kBase +
            static_cast<std::uint64_t>(text[i + k_]);
    }
}

ContaminationResult ContaminationFilter::filter(const std::vector<EvalItem>& items) const
{
    ContaminationResult result;
    for (std::size_t i = 0; i < items.size(); ++i)
    {
        std::u32string cps = util::decode_utf8(items[i].text);
        std::size_t eval_offset = 0;
        TrainRef hit;
        if (find_match(cps, eval_offset, hit))
        {
            result.removed.push_back({items[i].id, train_ids_[hit.doc], eval_offset, hit.offset});
        }
        else
        {
            result.kept_indices.push_back(i);
        }
    }
    return result;
}

} // namespace tcmpipe::quality
