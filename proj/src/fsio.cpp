// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ftmcfe/fsio.hpp"

#include <fstream>

namespace ftmcfe {

void write_file(const std::filesystem::path& path, BytesView payload, bool with_checksum)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
    if (with_checksum) {
        const Digest d = sha256(payload);
        out.write(reinterpret_cast<const char*>(d.data()), static_cast<std::streamsize>(d.size()));
    }
    out.flush();
    if (!out)
        fail(ErrorCode::IoError, "short write to " + path.string());
}

Bytes read_file(const std::filesystem::path& path, bool with_checksum)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::IoError, "cannot open " + path.string());
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!with_checksum)
        return data;
    if (data.size() < 32)
        fail(ErrorCode::CorruptKey, path.string() + " too short for its checksum");
    const BytesView payload(data.data(), data.size() - 32);
    const Digest d = sha256(payload);
    if (!std::equal(d.begin(), d.end(), data.end() - 32))
        fail(ErrorCode::CorruptKey, path.string() + " failed its checksum");
    data.resize(data.size() - 32);
    return data;
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    out << text;
    if (!out)
        fail(ErrorCode::IoError, "short write to " + path.string());
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::IoError, "cannot open " + path.string());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace ftmcfe
