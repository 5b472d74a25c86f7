#pragma once

#include <cstdint>

namespace k3ml::exact {

// Kronecker symbol (a/n). Throws DomainError for n == 0.
int kronecker_symbol(std::int64_t a, std::int64_t n);

}  // namespace k3ml::exact
