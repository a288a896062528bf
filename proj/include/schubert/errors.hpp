#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-domain input (bad descriptor, ceiling violation, ...).
struct invalid_input : error {
    explicit invalid_input(const std::string& msg) : error(msg) {}
};

/// Ring elements from different cohomology contexts were combined.
struct context_mismatch : error {
    explicit context_mismatch(const std::string& msg) : error(msg) {}
};

/// The delta sequence signals no meaningful dual variety (all entries zero,
/// or the leading nonzero entry is negative).
struct degenerate_embedding : error {
    explicit degenerate_embedding(const std::string& msg) : error(msg) {}
};

/// A reproduced value disagrees with a pinned reference anchor.
struct anchor_regression : error {
    explicit anchor_regression(const std::string& msg) : error(msg) {}
};

} // namespace schubert
