#pragma once
#include <optional>

#include "tropical/matrix.hpp"

namespace trop {

// Exact phase-one simplex (Bland's rule): some y >= 0 with a y = b, or
// nullopt when no such y exists.
std::optional<Vec> find_nonnegative(const Matrix& a, const Vec& b);

}  // namespace trop
