#include "tcmpipe/quality/prompt.hpp"

#include "tcmpipe/util/errors.hpp"
#include "tcmpipe/util/jsonl.hpp"

#include <algorithm>
#include <set>

namespace tcmpipe::quality {

namespace {

const char* kRatingBody =
    "**Task Description:**\n"
    "Please evaluate the quality of the following paragraph related to Traditional Chinese Medicine (TCM) "
    "and assign a score (1–5) based on the criteria below:\n"
    "\n"
    "**Scoring Criteria:**\n"
    "**1 point**: The content is largely irrelevant to TCM or fails to provide any useful TCM knowledge.\n"
    "**2 points**: Contains minimal TCM content, or the TCM knowledge provided is extremely limited.\n"
    "**3 points**: Includes some TCM content, but the information is limited or contains advertisements or "
    "false/misleading claims (unreliable).\n"
    "**4 points**: Provides relatively reliable TCM knowledge and is suitable for model training.\n"
    "**5 points**: Offers rich and accurate TCM knowledge of high quality, suitable for high-quality training data.\n"
    "\n"
    "Please output a **number between 1 and 5** as the score only. Do not include any additional text.\n"
    "\n"
    "**Text to be evaluated:**\n"
    "<TCM Paragraph>\n"
    "{TCM Paragraph}\n"
    "</TCM Paragraph>\n";

const char* kCaptionBody =
    "{image}\n"
    "\n"
    "Please generate a professional, detailed, and high-quality description for the medical image I provide. "
    "The description should include as many Traditional Chinese Medicine (TCM)-related visual details as "
    "possible to ensure clinical readability, professionalism, and comprehensiveness, while also being "
    "understandable to the general public. Aim to make the description as rich and detailed as possible, "
    "providing extensive visual information.\n"
    "\n"
    "You may refer to the image's context to improve the accuracy and completeness of your description, but "
    "do not reveal that you referenced the context.\n"
    "\n"
    "<caption>\n"
    "{caption}\n"
    "</caption>\n"
    "\n"
    "<image context> (<image> represents the location of the image)\n"
    "{image context}\n"
    "</image context>\n"
    "\n"
    "Please output a detailed description of the image only. Do not generate any content unrelated to the task.\n";

const char* kQuestionBody =
    "{image}\n"
    "\n"
    "Please generate a Traditional Chinese medicine (TCM)-related question about the medical image I provide. "
    "The question should assess the model's visual capabilities. Avoid being too specific—design the "
    "question so that it requires the model to look at the image to answer. The question should demand strong "
    "visual understanding as well as some knowledge of Traditional Chinese medicine.\n"
    "\n"
    "You may refer to the provided image caption and contextual information to improve the quality of the "
    "question. However, **do not mention or reference the caption or context in the question itself—assume "
    "they are not available**.\n"
    "\n"
    "<caption>\n"
    "{caption}\n"
    "</caption>\n"
    "\n"
    "<image context> (<image> represents the location of the image)\n"
    "{image context}\n"
    "</image context>\n"
    "\n"
    "Please generate the question directly. Do not include any content unrelated to the task.\n";

const char* kAnswerBody =
    "{image}\n"
    "\n"
    "<question>\n"
    "{question}\n"
    "</question>\n"
    "\n"
    "You are now required to look at the image I provide and answer the user's question about Traditional "
    "Chinese Medicine (<question>). Make sure your response directly addresses the user's query, follows "
    "instructions well, and is as detailed and rich as possible, with the style and quality characteristic of "
    "GPT-4o.\n"
    "\n"
    "You may refer to the image caption and contextual information I secretly provide to you in order to "
    "improve the accuracy and completeness of your answer. However, **do not mention or reference the caption "
    "or context in your response—assume they are not available**.\n"
    "\n"
    "<caption>\n"
    "{caption}\n"
    "</caption>\n"
    "\n"
    "<image context> (<image> represents the location of the image)\n"
    "{image context}\n"
    "</image context>\n"
    "\n"
    "Please generate the answer directly. Do not include any unrelated content.\n";

const char* kVerifierBody =
    "<Model Response>\n"
    "{Model Response}\n"
    "</Model Response>\n"
    "\n"
    "<Reference Answer>\n"
    "{Ground-true Answer}\n"
    "</Reference Answer>\n"
    "\n"
    "You are provided with a model-generated response (<Model Response>) and a reference answer "
    "(<Reference Answer>). Compare the model response with the reference answer and determine its correctness. "
    "Your task is to simply output \"True\" if the response is correct, and \"False\" otherwise.\n";

std::vector<std::string> discover_placeholders(const std::string& body)
{
    std::set<std::string> seen;
    std::vector<std::string> ordered;
    std::size_t i = 0;
    while (i < body.size())
    {
        if (body[i] != '{')
        {
            ++i;
            continue;
        }
        std::size_t close = body.find('}', i + 1);
        if (close == std::string::npos)
        {
            break;
        }
        std::string name = body.substr(i + 1, close - i - 1);
        if (!name.empty() && seen.insert(name).second)
        {
            ordered.push_back(name);
        }
        i = close + 1;
    }
    return ordered;
}

std::map<std::string, PromptTemplate> make_builtins()
{
    std::map<std::string, PromptTemplate> out;
    out["rating"] = template_from_body("rating", kRatingBody);
    out["caption"] = template_from_body("caption", kCaptionBody);
    out["question"] = template_from_body("question", kQuestionBody);
    out["answer"] = template_from_body("answer", kAnswerBody);
    out["verifier"] = template_from_body("verifier", kVerifierBody);
    return out;
}

const std::map<std::string, PromptTemplate>& builtins()
{
    static const std::map<std::string, PromptTemplate> tmpls = make_builtins();
    return tmpls;
}

} // namespace

PromptTemplate template_from_body(std::string name, std::string body)
{
    PromptTemplate tmpl;
    tmpl.name = std::move(name);
    tmpl.body = std::move(body);
    tmpl.placeholders = discover_placeholders(tmpl.body);
    return tmpl;
}

const PromptTemplate& builtin_template(const std::string& name)
{
    auto it = builtins().find(name);
    if (it == builtins().end())
    {
        fail(Errc::schema_error, "unknown built-in template: " + name);
    }
    return it->second;
}

std::vector<std::string> builtin_template_names()
{
    std::vector<std::string> names;
    for (const auto& [name, tmpl] : builtins())
    {
        names.push_back(name);
    }
    return names;
}

PromptTemplate load_template(const std::filesystem::path& path)
{
    return template_from_body(path.stem().string(), util::read_text_file(path));
}

std::string render_prompt(const PromptTemplate& tmpl, const std::map<std::string, std::string>& bindings,
                          std::vector<std::string>* warnings)
{
    for (const auto& [key, value] : bindings)
    {
        if (std::find(tmpl.placeholders.begin(), tmpl.placeholders.end(), key) == tmpl.placeholders.end())
        {
            fail(Errc::unknown_placeholder, "'" + key + "' is not a placeholder of template " + tmpl.name);
        }
    }

    std::string out;
    out.reserve(tmpl.body.size());
    std::size_t i = 0;
    while (i < tmpl.body.size())
    {
        if (tmpl.body[i] != '{')
        {
            out.push_back(tmpl.body[i]);
            ++i;
            continue;
        }
        std::size_t close = tmpl.body.find('}', i + 1);
        if (close == std::string::npos)
        {
            out.append(tmpl.body, i, std::string::npos);
            break;
        }
        std::string name = tmpl.body.substr(i + 1, close - i - 1);
        auto it = bindings.find(name);
        if (it == bindings.end())
        {
            fail(Errc::missing_binding, "no binding for placeholder '" + name + "' of template " + tmpl.name);
        }
        if (it->second.empty() && warnings != nullptr)
        {
            warnings->push_back("placeholder '" + name + "' bound to empty string");
        }
        out += it->second;
        i = close + 1;
    }
    return out;
}

void write_builtin_templates(const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    for (const auto& name : builtin_template_names())
    {
        util::write_text_file_atomic(dir / (name + ".txt"), builtin_template(name).body);
    }
}

} // namespace tcmpipe::quality
