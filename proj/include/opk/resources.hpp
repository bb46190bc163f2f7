#pragma once

#include <cstddef>

namespace opk {

// Basis-size budget for generated complexes, from OPK_MAX_BASIS.
std::size_t resource_cap();

// Throws resource_error when count exceeds the cap.
void charge_basis(std::size_t count, const char* what);

}  // namespace opk
