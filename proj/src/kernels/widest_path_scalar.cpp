#include "apv/kernels/widest_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace apv::kernels {

void widest_path_scalar(std::span<std::int32_t> w, std::size_t n) {
    if (w.size() != n * n) throw std::invalid_argument("widest_path: buffer is not n*n");
    std::int32_t* const data = w.data();
    for (std::size_t k = 0; k < n; ++k) {
        const std::int32_t* row_k = data + k * n;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            std::int32_t* row_i = data + i * n;
            const std::int32_t via = row_i[k];
            for (std::size_t j = 0; j < n; ++j) row_i[j] = std::max(row_i[j], std::min(via, row_k[j]));
        }
    }
}

}  // namespace apv::kernels
