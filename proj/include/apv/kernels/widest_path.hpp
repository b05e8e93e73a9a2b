#pragma once

// In-place max-min (widest path) closure over a dense n*n int32 matrix:
//
//   for k: for i: for j: w[i][j] = max(w[i][j], min(w[i][k], w[k][j]))
//
// Every variant computes the same result bit for bit. Row k is skipped in
// iteration k (it cannot change), and column k is stable during it, so the
// j-loop vectorizes. Diagonal cells are updated like any other and carry no
// meaning for callers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace apv::kernels {

enum class Isa { Scalar, Avx2, Avx512, Neon };

std::string_view to_string(Isa isa);

using WidestPathFn = void (*)(std::span<std::int32_t> w, std::size_t n);

void widest_path_scalar(std::span<std::int32_t> w, std::size_t n);
#if defined(APV_HAVE_AVX2)
void widest_path_avx2(std::span<std::int32_t> w, std::size_t n);
#endif
#if defined(APV_HAVE_AVX512)
void widest_path_avx512(std::span<std::int32_t> w, std::size_t n);
#endif
#if defined(APV_HAVE_NEON)
void widest_path_neon(std::span<std::int32_t> w, std::size_t n);
#endif

/// Compiled into this build and supported by the running CPU.
bool isa_available(Isa isa);
std::vector<Isa> available_isas();
/// Widest available variant; probed once.
Isa best_isa();

/// Throws std::invalid_argument when `isa` is not available.
WidestPathFn kernel_for(Isa isa);

inline void widest_path(std::span<std::int32_t> w, std::size_t n) { kernel_for(best_isa())(w, n); }

}  // namespace apv::kernels
