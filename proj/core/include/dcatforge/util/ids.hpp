#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dcatforge::util {

/// 64-bit FNV-1a over a byte string, seedable so two independent streams can
/// be derived from the same input.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

/// Lower-case hex rendering of a 64-bit value, zero-padded to 16 chars.
std::string hex64(std::uint64_t value);

/// Deterministic name-based id in the canonical UUID textual shape
/// (8-4-4-4-12 lower-case hex). The same name always yields the same id.
std::string name_uuid(std::string_view name);

/// True if `s` has the canonical UUID textual shape.
bool looks_like_uuid(std::string_view s);

/// True if `s` looks like an absolute IRI: a scheme ([A-Za-z][A-Za-z0-9+.-]*)
/// followed by ':'.
bool is_absolute_iri(std::string_view s);

} // namespace dcatforge::util
