#ifndef SYMTC_PIPELINE_HPP
#define SYMTC_PIPELINE_HPP

#include <optional>
#include <string>

#include "symtc/complex.hpp"
#include "symtc/sym_square.hpp"

namespace symtc {

/// Everything the commands need about one input space: the complex and its
/// fully built symmetric square package.
struct SquareWorkspace {
    Complex complex;
    EquivariantPair square;  // base holds the simplicial set of `complex`
};

/// Cache key: content hash of the canonical complex serialization plus the
/// pipeline version (hex string).
std::string workspace_cache_key(const Complex& c);

/// Build the workspace, consulting/filling the cache directory when given.
/// Cache writes are atomic (write-temp-then-rename); a corrupt or
/// version-mismatched entry is ignored and rebuilt.
SquareWorkspace build_square_workspace(const Complex& c,
                                       const std::optional<std::string>& cache_dir = std::nullopt,
                                       bool* cache_hit = nullptr);

/// Serialized form of the workspace (JSON, stable layout).
std::string serialize_workspace(const SquareWorkspace& w);
SquareWorkspace deserialize_workspace(const std::string& text);

/// Grade counts and orbit tables as JSON (the --dump-debug payload).
std::string debug_dump_json(const SquareWorkspace& w);

}  // namespace symtc

#endif
