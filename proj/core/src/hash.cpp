#include "tcmpipe/util/hash.hpp"

#include "tcmpipe/util/errors.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

namespace tcmpipe::util {

namespace {

struct DigestCtx {
    EVP_MD_CTX* ctx = nullptr;

    DigestCtx()
    {
        ctx = EVP_MD_CTX_new();
        if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1)
        {
            fail(Errc::io_error, "cannot initialize sha256");
        }
    }
    ~DigestCtx()
    {
        if (ctx != nullptr)
        {
            EVP_MD_CTX_free(ctx);
        }
    }
    DigestCtx(const DigestCtx&) = delete;
    DigestCtx& operator=(const DigestCtx&) = delete;

    void update(const void* data, std::size_t size)
    {
        if (EVP_DigestUpdate(ctx, data, size) != 1)
        {
            fail(Errc::io_error, "sha256 update failed");
        }
    }

    std::string hex()
    {
        std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
        unsigned int len = 0;
        if (EVP_DigestFinal_ex(ctx, digest.data(), &len) != 1)
        {
            fail(Errc::io_error, "sha256 final failed");
        }
        static const char* alphabet = "0123456789abcdef";
        std::string out;
        out.reserve(len * 2);
        for (unsigned int i = 0; i < len; ++i)
        {
            out.push_back(alphabet[digest[i] >> 4]);
            out.push_back(alphabet[digest[i] & 0x0F]);
        }
        return out;
    }
};

} // namespace

std::string sha256_hex(std::string_view bytes)
{
    DigestCtx d;
    d.update(bytes.data(), bytes.size());
    return d.hex();
}

std::string sha256_file_hex(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        fail(Errc::io_error, "cannot open file for hashing: " + path.string());
    }
    DigestCtx d;
    std::array<char, 1 << 16> buffer;
    while (in)
    {
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        std::streamsize got = in.gcount();
        if (got > 0)
        {
            d.update(buffer.data(), static_cast<std::size_t>(got));
        }
    }
    return d.hex();
}

} // namespace tcmpipe::util
