#include "tcmpipe/util/jsonl.hpp"

#include "tcmpipe/util/errors.hpp"

#include <zlib.h>

#include <fstream>
#include <sstream>

namespace tcmpipe::util {

namespace {

bool has_gz_suffix(const std::filesystem::path& path)
{
    auto s = path.string();
    return s.size() >= 3 && s.compare(s.size() - 3, 3, ".gz") == 0;
}

} // namespace

struct LineReader::Impl {
    std::ifstream plain;
    gzFile gz = nullptr;
    std::string pending;
    bool gz_eof = false;

    explicit Impl(const std::filesystem::path& path)
    {
        if (has_gz_suffix(path))
        {
            gz = gzopen(path.string().c_str(), "rb");
            if (gz == nullptr)
            {
                fail(Errc::io_error, "cannot open " + path.string());
            }
        }
        else
        {
            plain.open(path, std::ios::binary);
            if (!plain)
            {
                fail(Errc::io_error, "cannot open " + path.string());
            }
        }
    }

    ~Impl()
    {
        if (gz != nullptr)
        {
            gzclose(gz);
        }
    }

    bool next(std::string& line)
    {
        if (gz != nullptr)
        {
            return next_gz(line);
        }
        if (!std::getline(plain, line))
        {
            return false;
        }
        if (!line.empty() && line.back() == '\r')
        {
            line.pop_back();
        }
        return true;
    }

    bool next_gz(std::string& line)
    {
        for (;;)
        {
            auto nl = pending.find('\n');
            if (nl != std::string::npos)
            {
                line.assign(pending, 0, nl);
                pending.erase(0, nl + 1);
                if (!line.empty() && line.back() == '\r')
                {
                    line.pop_back();
                }
                return true;
            }
            if (gz_eof)
            {
                if (pending.empty())
                {
                    return false;
                }
                line = std::move(pending);
                pending.clear();
                if (!line.empty() && line.back() == '\r')
                {
                    line.pop_back();
                }
                return true;
            }
            char buf[1 << 15];
            int got = gzread(gz, buf, sizeof(buf));
            if (got < 0)
            {
                fail(Errc::io_error, "gzip read error");
            }
            if (got == 0)
            {
                gz_eof = true;
                continue;
            }
            pending.append(buf, static_cast<std::size_t>(got));
        }
    }
};

LineReader::LineReader(const std::filesystem::path& path) : impl_(std::make_unique<Impl>(path)) {}
LineReader::~LineReader() = default;
LineReader::LineReader(LineReader&&) noexcept = default;
LineReader& LineReader::operator=(LineReader&&) noexcept = default;

bool LineReader::next(std::string& line)
{
    return impl_->next(line);
}

void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(const nlohmann::json&, std::size_t)>& fn)
{
    LineReader reader(path);
    std::string line;
    std::size_t lineno = 0;
    while (reader.next(line))
    {
        ++lineno;
        if (line.empty())
        {
            continue;
        }
        nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
        if (row.is_discarded())
        {
            fail(Errc::schema_error, path.string() + ":" + std::to_string(lineno) + ": invalid JSON");
        }
        fn(row, lineno);
    }
}

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path)
{
    std::vector<nlohmann::json> rows;
    for_each_jsonl(path, [&](const nlohmann::json& row, std::size_t) { rows.push_back(row); });
    return rows;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<nlohmann::json>& rows)
{
    std::string out;
    for (const auto& row : rows)
    {
        out += row.dump();
        out += '\n';
    }
    write_text_file_atomic(path, out);
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        fail(Errc::io_error, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    auto parent = path.parent_path();
    if (!parent.empty())
    {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
    }
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
        {
            fail(Errc::io_error, "cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
        {
            fail(Errc::io_error, "short write to " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
    {
        fail(Errc::io_error, "cannot rename " + tmp.string() + " to " + path.string());
    }
}

} // namespace tcmpipe::util
