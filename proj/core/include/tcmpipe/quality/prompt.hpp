#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace tcmpipe::quality {

// Template with {placeholder} markers. The placeholder set is the exact set of
// markers in the body; render enforces that bindings cover it exactly.
struct PromptTemplate {
    std::string name;
    std::string body;
    std::vector<std::string> placeholders;
};

// Built-in templates used by the external providers: "rating", "caption",
// "question", "answer", "verifier".
const PromptTemplate& builtin_template(const std::string& name);
std::vector<std::string> builtin_template_names();

PromptTemplate template_from_body(std::string name, std::string body);
PromptTemplate load_template(const std::filesystem::path& path);

// Byte-exact substitution; no markers remain. Missing or extra bindings raise
// Errc::missing_binding / Errc::unknown_placeholder. Empty bound values render
// as empty strings and add a warning.
std::string render_prompt(const PromptTemplate& tmpl, const std::map<std::string, std::string>& bindings,
                          std::vector<std::string>* warnings = nullptr);

// Writes all built-in templates as UTF-8 files named <name>.txt.
void write_builtin_templates(const std::filesystem::path& dir);

} // namespace tcmpipe::quality
