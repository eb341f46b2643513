#include "qlim/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace qlim {

double PhysicalConstants::planck_length() const {
    return std::sqrt(hbar * G / (c * c * c));
}

double PhysicalConstants::planck_mass() const {
    return std::sqrt(hbar * c / G);
}

void PhysicalConstants::validate() const {
    auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!ok(hbar) || !ok(c) || !ok(G)) {
        throw std::invalid_argument("PhysicalConstants: hbar, c, G must be finite and > 0");
    }
}

double compton_wavelength(double mass, const PhysicalConstants& k) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::domain_error("compton_wavelength: mass must be > 0");
    }
    return k.hbar / (mass * k.c);
}

}  // namespace qlim
