#ifndef QLIM_FREQUENCY_GRID_HPP
#define QLIM_FREQUENCY_GRID_HPP

#include <cstddef>
#include <vector>

namespace qlim {

/// Strictly increasing angular frequencies (rad/s), all > 0.
///
/// The 1/omega spectra handled by this project diverge at omega = 0, so a
/// grid never contains it; every operation in every module relies on that.
class FrequencyGrid {
  public:
    explicit FrequencyGrid(std::vector<double> omegas);

    static FrequencyGrid linear(double omega_min, double omega_max, std::size_t points);
    static FrequencyGrid log_spaced(double omega_min, double omega_max, std::size_t points);

    const std::vector<double>& omegas() const noexcept { return omegas_; }
    std::size_t size() const noexcept { return omegas_.size(); }
    double operator[](std::size_t i) const { return omegas_[i]; }
    double front() const { return omegas_.front(); }
    double back() const { return omegas_.back(); }

    bool same_as(const FrequencyGrid& other) const { return omegas_ == other.omegas_; }

  private:
    std::vector<double> omegas_;
};

}  // namespace qlim

#endif
