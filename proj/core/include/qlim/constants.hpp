#ifndef QLIM_CONSTANTS_HPP
#define QLIM_CONSTANTS_HPP

namespace qlim {

/// Fundamental constants in SI units. Defaults are CODATA 2018 values;
/// every field can be overridden (unit tests use round numbers).
struct PhysicalConstants {
    double hbar = 1.054571817e-34;  // J s
    double c = 299792458.0;         // m / s
    double G = 6.67430e-11;         // m^3 kg^-1 s^-2

    /// l_p = sqrt(hbar G / c^3), computed from the stored fields.
    double planck_length() const;
    /// m_p = sqrt(hbar c / G), computed from the stored fields.
    double planck_mass() const;

    /// Throws std::invalid_argument unless all fields are strictly positive
    /// and finite.
    void validate() const;

    static PhysicalConstants codata() { return {}; }
    /// hbar = c = G = 1, for tests that want unit-free arithmetic.
    static PhysicalConstants natural() { return {1.0, 1.0, 1.0}; }
};

/// Compton wavelength hbar / (m c). Throws std::domain_error for m <= 0.
double compton_wavelength(double mass, const PhysicalConstants& k);

}  // namespace qlim

#endif
