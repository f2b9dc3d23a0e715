#ifndef WITTEN_CACHE_HPP
#define WITTEN_CACHE_HPP

// On-disk store for invariant-set results: one canonical-text record per
// (kind, type) key, content-addressed by a hash of the pairing matrix.
// Corrupt or mismatched records are ignored and recomputed.

#include "witten/lattice_comb.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace witten {

std::uint64_t matrix_content_hash(const IntMatrix& m);

std::optional<InvariantSet> cache_load(const std::filesystem::path& dir, SetKind kind,
                                       const std::string& phi, std::uint64_t content_hash);

void cache_store(const std::filesystem::path& dir, const InvariantSet& set,
                 std::uint64_t content_hash);

}  // namespace witten

#endif  // WITTEN_CACHE_HPP
