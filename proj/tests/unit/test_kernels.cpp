#include "apv/kernels/widest_path.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace apv::kernels;

namespace {

std::vector<std::int32_t> random_weights(std::mt19937_64& rng, std::size_t n, std::int32_t max_value) {
    std::uniform_int_distribution<std::int32_t> dist(1, max_value);
    std::vector<std::int32_t> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = i == j ? 0 : dist(rng);
    return w;
}

// Textbook triple loop, row k included.
void naive_closure(std::vector<std::int32_t>& w, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                w[i * n + j] = std::max(w[i * n + j], std::min(w[i * n + k], w[k * n + j]));
}

}  // namespace

TEST_CASE("scalar kernel matches the textbook recurrence") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u, 21u}) {
        auto w = random_weights(rng, n, 50);
        auto expected = w;
        naive_closure(expected, n);
        widest_path_scalar(w, n);
        CHECK(w == expected);
    }
}

TEST_CASE("every available kernel agrees with the scalar one") {
    std::mt19937_64 rng(42);
    const auto isas = available_isas();
    REQUIRE(std::find(isas.begin(), isas.end(), Isa::Scalar) != isas.end());
    for (Isa isa : isas) {
        CAPTURE(to_string(isa));
        const WidestPathFn fn = kernel_for(isa);
        for (std::size_t n = 1; n <= 70; n += (n < 20 ? 1 : 7)) {
            for (std::int32_t max_value : {3, 1000, 2000000000}) {
                auto w = random_weights(rng, n, max_value);
                auto expected = w;
                widest_path_scalar(expected, n);
                fn(w, n);
                CHECK(w == expected);
            }
        }
    }
}

TEST_CASE("dispatch") {
    CHECK(isa_available(Isa::Scalar));
    CHECK(isa_available(best_isa()));
    CHECK(to_string(Isa::Scalar) == "scalar");
    for (Isa isa : {Isa::Avx2, Isa::Avx512, Isa::Neon})
        if (!isa_available(isa)) CHECK_THROWS_AS(kernel_for(isa), std::invalid_argument);
}

TEST_CASE("closure is idempotent") {
    std::mt19937_64 rng(5);
    auto w = random_weights(rng, 17, 9);
    widest_path(w, 17);
    auto again = w;
    widest_path(again, 17);
    CHECK(again == w);
}
