#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace tcmpipe::corpus {

enum class Source { web, book, wechat };

const char* source_name(Source s);
Source source_from_name(const std::string& name);

// Interleaved image marker: an opaque image id anchored at a byte offset into
// the document text.
struct ImageRef {
    std::string id;
    std::size_t offset = 0;
};

struct RawDocument {
    std::string id;
    Source source = Source::web;
    std::string text; // UTF-8, NFC after ingest
    std::vector<ImageRef> image_refs;
    std::string collected_at; // ISO-8601 date
};

// Normalizes text (CRLF -> LF, NFC) and rebases image_ref offsets onto the
// normalized text. Throws Errc::schema_error when offsets are out of range or
// decreasing, or when the id is empty.
RawDocument ingest_document(RawDocument doc);

nlohmann::json document_to_json(const RawDocument& doc);
RawDocument document_from_json(const nlohmann::json& row);

} // namespace tcmpipe::corpus
