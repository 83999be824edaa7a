#pragma once

// Fixed-width fast paths for the enumeration and orbit-search hot loops.
//
// All arithmetic is overflow-checked: a kernel either returns the exact
// answer or reports Overflow, in which case callers fall back to the GMP
// route. Nothing here ever wraps silently.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "ncsurf/mutation.hpp"

namespace ncsurf::kernels {

inline constexpr std::size_t max_rank = 10;

enum class Screen : std::uint8_t { fail, pass, overflow };

/// Exact surface-type decision for the unit upper-triangular matrix with the
/// given strictly upper entries (row-major), using checked int64 arithmetic.
Screen screen_surface_type(std::span<const std::int64_t> upper, std::size_t n, std::size_t required_rank);

/// Applies one generator to a packed Gram matrix. Returns false on overflow
/// (out is then unspecified).
bool apply_generator_packed(std::span<const std::int64_t> upper, std::size_t n, BraidGenerator g,
                            std::span<std::int64_t> out);

} // namespace ncsurf::kernels
