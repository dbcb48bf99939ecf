#pragma once

#include <cmath>

// Relative difference, falling back to absolute near zero.
inline double rel_err(double got, double want)
{
    const double scale = std::abs(want) > 0 ? std::abs(want) : 1.0;
    return std::abs(got - want) / scale;
}
