#include "tcmpipe/corpus/document.hpp"

#include "tcmpipe/util/errors.hpp"
#include "tcmpipe/util/unicode.hpp"

#include <algorithm>

namespace tcmpipe::corpus {

const char* source_name(Source s)
{
    switch (s)
    {
    case Source::web:
        return "web";
    case Source::book:
        return "book";
    case Source::wechat:
        return "wechat";
    }
    return "web";
}

Source source_from_name(const std::string& name)
{
    if (name == "web")
    {
        return Source::web;
    }
    if (name == "book")
    {
        return Source::book;
    }
    if (name == "wechat")
    {
        return Source::wechat;
    }
    fail(Errc::schema_error, "unknown document source: " + name);
}

RawDocument ingest_document(RawDocument doc)
{
    if (doc.id.empty())
    {
        fail(Errc::schema_error, "document id must be non-empty");
    }
    for (std::size_t i = 0; i < doc.image_refs.size(); ++i)
    {
        if (doc.image_refs[i].offset > doc.text.size())
        {
            fail(Errc::schema_error, "image_ref offset out of range in document " + doc.id);
        }
        if (i > 0 && doc.image_refs[i].offset < doc.image_refs[i - 1].offset)
        {
            fail(Errc::schema_error, "image_ref offsets must be non-decreasing in document " + doc.id);
        }
    }

    // Normalization can change byte lengths, so normalize the segments between
    // image anchors independently and recompute offsets from the new lengths.
    std::string normalized;
    std::vector<ImageRef> refs;
    refs.reserve(doc.image_refs.size());
    std::size_t begin = 0;
    for (const ImageRef& ref : doc.image_refs)
    {
        normalized += util::normalize_ingest(std::string_view(doc.text).substr(begin, ref.offset - begin));
        refs.push_back({ref.id, normalized.size()});
        begin = ref.offset;
    }
    normalized += util::normalize_ingest(std::string_view(doc.text).substr(begin));

    doc.text = std::move(normalized);
    doc.image_refs = std::move(refs);
    return doc;
}

nlohmann::json document_to_json(const RawDocument& doc)
{
    nlohmann::json refs = nlohmann::json::array();
    for (const auto& ref : doc.image_refs)
    {
        refs.push_back({{"id", ref.id}, {"offset", ref.offset}});
    }
    return {{"id", doc.id},
            {"source", source_name(doc.source)},
            {"text", doc.text},
            {"image_refs", refs},
            {"collected_at", doc.collected_at}};
}

RawDocument document_from_json(const nlohmann::json& row)
{
    if (!row.is_object() || !row.contains("id") || !row.contains("text"))
    {
        fail(Errc::schema_error, "document row needs at least {id, text}");
    }
    RawDocument doc;
    doc.id = row.at("id").get<std::string>();
    doc.text = row.at("text").get<std::string>();
    if (row.contains("source"))
    {
        doc.source = source_from_name(row.at("source").get<std::string>());
    }
    if (row.contains("collected_at"))
    {
        doc.collected_at = row.at("collected_at").get<std::string>();
    }
    if (row.contains("image_refs"))
    {
        for (const auto& ref : row.at("image_refs"))
        {
            doc.image_refs.push_back({ref.at("id").get<std::string>(), ref.at("offset").get<std::size_t>()});
        }
    }
    return doc;
}

} // namespace tcmpipe::corpus
