#include "qlim/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qlim::fft {
namespace {

// FFTW's planner is not thread-safe; plans are cached per thread with their
// own aligned buffers and executed on those buffers only.
std::mutex planner_mutex;

struct R2cPlan {
    fftw_plan plan = nullptr;
    double* in = nullptr;
    fftw_complex* out = nullptr;
    std::size_t n = 0;

    ~R2cPlan() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        if (plan) fftw_destroy_plan(plan);
        if (in) fftw_free(in);
        if (out) fftw_free(out);
    }
};

struct C2rPlan {
    fftw_plan plan = nullptr;
    fftw_complex* in = nullptr;
    double* out = nullptr;
    std::size_t n = 0;

    ~C2rPlan() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        if (plan) fftw_destroy_plan(plan);
        if (in) fftw_free(in);
        if (out) fftw_free(out);
    }
};

R2cPlan& r2c_plan(std::size_t n) {
    thread_local std::map<std::size_t, R2cPlan> cache;
    auto& entry = cache[n];
    if (!entry.plan) {
        std::lock_guard<std::mutex> lock(planner_mutex);
        entry.n = n;
        entry.in = fftw_alloc_real(n);
        entry.out = fftw_alloc_complex(n / 2 + 1);
        entry.plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), entry.in, entry.out, FFTW_ESTIMATE);
        if (!entry.plan) throw std::runtime_error("fftw r2c plan failed");
    }
    return entry;
}

C2rPlan& c2r_plan(std::size_t n) {
    thread_local std::map<std::size_t, C2rPlan> cache;
    auto& entry = cache[n];
    if (!entry.plan) {
        std::lock_guard<std::mutex> lock(planner_mutex);
        entry.n = n;
        entry.in = fftw_alloc_complex(n / 2 + 1);
        entry.out = fftw_alloc_real(n);
        entry.plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), entry.in, entry.out, FFTW_ESTIMATE);
        if (!entry.plan) throw std::runtime_error("fftw c2r plan failed");
    }
    return entry;
}

}  // namespace

void real_forward(std::span<const double> in, std::vector<std::complex<double>>& out) {
    const std::size_t n = in.size();
    if (n < 2) throw std::invalid_argument("fft::real_forward: need at least 2 samples");
    auto& p = r2c_plan(n);
    std::memcpy(p.in, in.data(), n * sizeof(double));
    fftw_execute(p.plan);
    out.resize(n / 2 + 1);
    std::memcpy(out.data(), p.out, (n / 2 + 1) * sizeof(fftw_complex));
}

void real_inverse(std::span<const std::complex<double>> in, std::size_t n,
                  std::vector<double>& out) {
    if (n < 2) throw std::invalid_argument("fft::real_inverse: need n >= 2");
    if (in.size() != n / 2 + 1) {
        throw std::invalid_argument("fft::real_inverse: expected n/2+1 bins");
    }
    auto& p = c2r_plan(n);
    std::memcpy(p.in, in.data(), (n / 2 + 1) * sizeof(fftw_complex));
    fftw_execute(p.plan);
    out.resize(n);
    std::memcpy(out.data(), p.out, n * sizeof(double));
}

}  // namespace qlim::fft
