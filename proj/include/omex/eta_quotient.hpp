#pragma once

#include <map>
#include <stdexcept>

namespace omex {

/// A level N together with integer exponents r_delta on divisors delta of N,
/// standing for the finite product prod_{delta | N} eta(delta z)^{r_delta}.
/// Zero exponents are omitted from the map.
struct EtaQuotient {
    long level = 1;
    std::map<long, long> exponents;

    EtaQuotient() = default;
    EtaQuotient(long n, std::map<long, long> exps) : level(n), exponents(std::move(exps)) {
        if (level < 1) throw std::invalid_argument("eta quotient level must be positive");
        for (auto it = exponents.begin(); it != exponents.end();) {
            if (it->first < 1 || level % it->first != 0)
                throw std::invalid_argument("eta quotient exponent key must divide the level");
            it = (it->second == 0) ? exponents.erase(it) : std::next(it);
        }
    }
};

}  // namespace omex
