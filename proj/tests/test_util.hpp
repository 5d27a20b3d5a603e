#pragma once

#include <random>
#include <vector>

#include "qcomb/qpoly.hpp"

namespace qcomb::testutil {

inline Rational random_rational(std::mt19937& rng, int num_range = 10, int den_range = 5) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

inline QPoly random_poly(std::mt19937& rng, int max_degree = 6) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = random_rational(rng);
    return QPoly(std::move(c));
}

inline QPoly random_nonzero_poly(std::mt19937& rng, int max_degree = 6) {
    while (true) {
        QPoly p = random_poly(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

}  // namespace qcomb::testutil
