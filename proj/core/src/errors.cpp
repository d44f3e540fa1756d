#include "tcmpipe/util/errors.hpp"

namespace tcmpipe {

const char* errc_name(Errc code)
{
    switch (code)
    {
    case Errc::empty_lexicon:
        return "EmptyLexicon";
    case Errc::invalid_threshold:
        return "InvalidThreshold";
    case Errc::provider_failure:
        return "ProviderFailure";
    case Errc::malformed_score:
        return "MalformedScore";
    case Errc::dimension_mismatch:
        return "DimensionMismatch";
    case Errc::zero_norm_vector:
        return "ZeroNormVector";
    case Errc::missing_binding:
        return "MissingBinding";
    case Errc::unknown_placeholder:
        return "UnknownPlaceholder";
    case Errc::too_short:
        return "TooShort";
    case Errc::non_finite_sample:
        return "NonFiniteSample";
    case Errc::empty_waveform:
        return "EmptyWaveform";
    case Errc::bad_role_order:
        return "BadRoleOrder";
    case Errc::too_few_entries:
        return "TooFewEntries";
    case Errc::duplicate_captions_in_window:
        return "DuplicateCaptionsInWindow";
    case Errc::empty_dataset:
        return "EmptyDataset";
    case Errc::single_class:
        return "SingleClass";
    case Errc::unknown_label:
        return "UnknownLabel";
    case Errc::wrong_run_count:
        return "WrongRunCount";
    case Errc::schema_error:
        return "SchemaError";
    case Errc::stage_failure:
        return "StageFailure";
    case Errc::io_error:
        return "IoError";
    }
    return "UnknownError";
}

} // namespace tcmpipe
