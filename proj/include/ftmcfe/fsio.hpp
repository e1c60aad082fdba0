// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/bytes.hpp"
#include "ftmcfe/errors.hpp"
#include "ftmcfe/hash.hpp"

#include <filesystem>

namespace ftmcfe {

// Key-store files carry a 32-byte SHA-256 trailer over the payload so that
// any bit flip is reported as corrupt-key rather than surviving as a valid
// but different scalar.

void write_file(const std::filesystem::path& path, BytesView payload, bool with_checksum);
Bytes read_file(const std::filesystem::path& path, bool with_checksum);

void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace ftmcfe
