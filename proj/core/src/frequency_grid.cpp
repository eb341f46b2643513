#include "qlim/frequency_grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlim {

FrequencyGrid::FrequencyGrid(std::vector<double> omegas) : omegas_(std::move(omegas)) {
    if (omegas_.empty()) {
        throw std::invalid_argument("FrequencyGrid: empty grid");
    }
    double prev = 0.0;
    for (std::size_t i = 0; i < omegas_.size(); ++i) {
        const double w = omegas_[i];
        if (!std::isfinite(w) || w <= 0.0) {
            throw std::invalid_argument("FrequencyGrid: omega must be finite and > 0 (index " +
                                        std::to_string(i) + ")");
        }
        if (w <= prev) {
            throw std::invalid_argument("FrequencyGrid: omegas must be strictly increasing (index " +
                                        std::to_string(i) + ")");
        }
        prev = w;
    }
}

FrequencyGrid FrequencyGrid::linear(double omega_min, double omega_max, std::size_t points) {
    if (points == 0) throw std::invalid_argument("FrequencyGrid::linear: points must be > 0");
    if (!(omega_min > 0.0) || !(omega_max >= omega_min)) {
        throw std::invalid_argument("FrequencyGrid::linear: need 0 < omega_min <= omega_max");
    }
    if (points == 1) {
        if (omega_min != omega_max) {
            throw std::invalid_argument("FrequencyGrid::linear: single point needs omega_min == omega_max");
        }
        return FrequencyGrid({omega_min});
    }
    std::vector<double> w(points);
    const double step = (omega_max - omega_min) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        w[i] = omega_min + step * static_cast<double>(i);
    }
    w.back() = omega_max;
    return FrequencyGrid(std::move(w));
}

FrequencyGrid FrequencyGrid::log_spaced(double omega_min, double omega_max, std::size_t points) {
    if (points == 0) throw std::invalid_argument("FrequencyGrid::log_spaced: points must be > 0");
    if (!(omega_min > 0.0) || !(omega_max >= omega_min)) {
        throw std::invalid_argument("FrequencyGrid::log_spaced: need 0 < omega_min <= omega_max");
    }
    if (points == 1) {
        if (omega_min != omega_max) {
            throw std::invalid_argument("FrequencyGrid::log_spaced: single point needs omega_min == omega_max");
        }
        return FrequencyGrid({omega_min});
    }
    std::vector<double> w(points);
    const double l0 = std::log(omega_min);
    const double step = (std::log(omega_max) - l0) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        w[i] = std::exp(l0 + step * static_cast<double>(i));
    }
    w.front() = omega_min;
    w.back() = omega_max;
    return FrequencyGrid(std::move(w));
}

}  // namespace qlim
