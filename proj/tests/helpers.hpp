#pragma once

#include <random>
#include <vector>

#include "burnside/matrix.hpp"
#include "burnside/rational.hpp"

namespace testutil {

inline burnside::RatMatrix mat(const std::vector<std::vector<burnside::Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    burnside::RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    return m;
}

inline burnside::RatMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    burnside::RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = burnside::Rational(num(rng), den(rng));
    return m;
}

inline burnside::RatMatrix random_nonsingular(std::mt19937& rng, std::size_t n) {
    for (;;) {
        auto m = random_matrix(rng, n);
        if (!burnside::mat_det(m).is_zero()) return m;
    }
}

}  // namespace testutil
