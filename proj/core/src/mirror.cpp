#include "qlim/mirror.hpp"

#include <cmath>
#include <stdexcept>

namespace qlim {

MirrorParams::MirrorParams(double mass, double omega0, double value, bool fixed_gamma)
    : mass_(mass), omega0_(omega0), value_(value), fixed_gamma_(fixed_gamma) {
    if (!(std::isfinite(mass_) && mass_ > 0.0)) {
        throw std::invalid_argument("MirrorParams: mass must be > 0");
    }
    if (!(std::isfinite(omega0_) && omega0_ >= 0.0)) {
        throw std::invalid_argument("MirrorParams: omega0 must be >= 0");
    }
}

MirrorParams MirrorParams::with_gamma(double mass, double omega0, double gamma) {
    if (!(std::isfinite(gamma) && gamma >= 0.0)) {
        throw std::invalid_argument("MirrorParams: gamma must be >= 0");
    }
    return MirrorParams(mass, omega0, gamma, true);
}

MirrorParams MirrorParams::with_alpha(double mass, double omega0, double alpha) {
    if (!(std::isfinite(alpha) && alpha > 0.0)) {
        throw std::invalid_argument("MirrorParams: alpha must be > 0");
    }
    return MirrorParams(mass, omega0, alpha, false);
}

double MirrorParams::gamma() const {
    if (!fixed_gamma_) {
        throw std::logic_error("MirrorParams: gamma() called on alpha-mode params");
    }
    return value_;
}

double MirrorParams::alpha() const {
    if (fixed_gamma_) {
        throw std::logic_error("MirrorParams: alpha() called on fixed-gamma params");
    }
    return value_;
}

}  // namespace qlim
