#ifndef QLIM_MIRROR_HPP
#define QLIM_MIRROR_HPP

namespace qlim {

/// Mechanical parameters of the measured mirror: mass, proper frequency
/// (0 = free mirror) and exactly one damping description — either a fixed
/// friction coefficient gamma, or the dimensionless vacuum-coupling factor
/// alpha from which gamma(omega) follows when paired with the mass.
class MirrorParams {
  public:
    static MirrorParams with_gamma(double mass, double omega0, double gamma);
    static MirrorParams with_alpha(double mass, double omega0, double alpha);

    double mass() const noexcept { return mass_; }
    double omega0() const noexcept { return omega0_; }

    bool uses_fixed_gamma() const noexcept { return fixed_gamma_; }
    /// Throws std::logic_error if the mirror is in alpha mode.
    double gamma() const;
    /// Throws std::logic_error if the mirror is in fixed-gamma mode.
    double alpha() const;

  private:
    MirrorParams(double mass, double omega0, double value, bool fixed_gamma);

    double mass_;
    double omega0_;
    double value_;  // gamma or alpha depending on mode
    bool fixed_gamma_;
};

}  // namespace qlim

#endif
