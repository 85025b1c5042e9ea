#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "burnside/matrix.hpp"
#include "burnside/rational.hpp"

namespace burnside {

/// Triangular tables of Stirling numbers of both kinds, exact big integers.
/// s1 is the signed first kind, s2 the second kind.
class StirlingTables {
public:
    explicit StirlingTables(std::size_t bound = 12) : bound_(bound) {
        s1_.resize(bound + 1);
        s2_.resize(bound + 1);
        for (std::size_t n = 0; n <= bound; ++n) {
            s1_[n].assign(n + 1, 0);
            s2_[n].assign(n + 1, 0);
        }
        s1_[0][0] = 1;
        s2_[0][0] = 1;
        for (std::size_t n = 1; n <= bound; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                s1_[n][k] = s1_[n - 1][k - 1] - mpz_class(long(n - 1)) * s1_[n - 1][k];
                s2_[n][k] = mpz_class(long(k)) * s2_[n - 1][k] + s2_[n - 1][k - 1];
            }
        }
    }

    std::size_t bound() const { return bound_; }

    /// Signed Stirling number of the first kind s(n, k); 0 outside the triangle.
    mpz_class s1(std::size_t n, std::size_t k) const {
        if (n > bound_) throw std::out_of_range("StirlingTables: n exceeds bound");
        if (k > n) return 0;
        return s1_[n][k];
    }

    /// Stirling number of the second kind S(n, k); 0 outside the triangle.
    mpz_class s2(std::size_t n, std::size_t k) const {
        if (n > bound_) throw std::out_of_range("StirlingTables: n exceeds bound");
        if (k > n) return 0;
        return s2_[n][k];
    }

private:
    std::size_t bound_;
    std::vector<std::vector<mpz_class>> s1_, s2_;
};

inline mpz_class factorial(std::size_t n) {
    mpz_class f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= mpz_class(long(i));
    return f;
}

/// Number of surjections from an i-element set onto a j-element set: j! * S(i, j).
inline mpz_class surj_count(std::size_t i, std::size_t j) {
    if (j > i) return 0;
    StirlingTables tables(i);
    return factorial(j) * tables.s2(i, j);
}

/// The d x d matrix with entry (i, j) = surj_count(i, j), 1-based, lower triangular.
inline RatMatrix epi_hom_closed_form(std::size_t d) {
    if (d < 1) throw std::invalid_argument("epi_hom_closed_form: d must be >= 1");
    StirlingTables tables(d);
    RatMatrix h(d, d);
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            h(i - 1, j - 1) = Rational(mpz_class(factorial(j) * tables.s2(i, j)));
    return h;
}

/// Last row of the inverse of epi_hom_closed_form(d): entry k = s(d, k) / d!.
inline std::vector<Rational> epi_inverse_last_row(std::size_t d) {
    if (d < 1) throw std::invalid_argument("epi_inverse_last_row: d must be >= 1");
    StirlingTables tables(d);
    mpz_class dfact = factorial(d);
    std::vector<Rational> row;
    row.reserve(d);
    for (std::size_t k = 1; k <= d; ++k)
        row.emplace_back(tables.s1(d, k), dfact);
    return row;
}

}  // namespace burnside
