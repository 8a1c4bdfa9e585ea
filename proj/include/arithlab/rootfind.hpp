#pragma once

#include <complex>
#include <vector>

namespace arithlab {

/// All complex roots of a polynomial with double coefficients (lowest degree
/// first) by Durand-Kerner iteration. Good to ~1e-12 for well-separated
/// roots; callers needing certified output must refine independently.
std::vector<std::complex<double>> polyroots_double(const std::vector<double>& coeffs);

}  // namespace arithlab
