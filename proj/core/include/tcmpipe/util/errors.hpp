#pragma once

#include <stdexcept>
#include <string>

namespace tcmpipe {

// Error conditions raised by the pipeline. Each value corresponds to a named
// contract violation of one of the library operations.
enum class Errc {
    empty_lexicon,
    invalid_threshold,
    provider_failure,
    malformed_score,
    dimension_mismatch,
    zero_norm_vector,
    missing_binding,
    unknown_placeholder,
    too_short,
    non_finite_sample,
    empty_waveform,
    bad_role_order,
    too_few_entries,
    duplicate_captions_in_window,
    empty_dataset,
    single_class,
    unknown_label,
    wrong_run_count,
    schema_error,
    stage_failure,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
    {
    }

    Errc code() const noexcept
    {
        return code_;
    }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace tcmpipe
