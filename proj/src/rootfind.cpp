#include "arithlab/rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace arithlab {

std::vector<std::complex<double>> polyroots_double(const std::vector<double>& coeffs) {
    std::vector<double> c = coeffs;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    size_t n = c.size() - 1;
    double lead = c.back();
    for (auto& v : c) v /= lead;
    // Cauchy bound for the initial circle
    double radius = 0.0;
    for (size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
    radius += 1.0;
    std::vector<std::complex<double>> z(n);
    for (size_t i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * (static_cast<double>(i) + 0.25) / static_cast<double>(n);
        z[i] = std::polar(0.7 * radius, ang);
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> r = 0.0;
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> num = eval(z[i]);
            std::complex<double> den = 1.0;
            for (size_t j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            std::complex<double> delta = num / den;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14 * (1.0 + radius)) break;
    }
    return z;
}

}  // namespace arithlab
