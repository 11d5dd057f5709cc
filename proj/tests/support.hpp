#ifndef CISSA_TESTS_SUPPORT_HPP
#define CISSA_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace testsup {

inline Eigen::VectorXd gaussian_series(unsigned seed, Eigen::Index n,
                                       double mean = 0.0, double sd = 1.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(mean, sd);
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        x[i] = dist(rng);
    }
    return x;
}

/// Symmetric circulant row with a given seed: c[m] == c[L-m] exactly.
inline Eigen::VectorXd symmetric_row(unsigned seed, Eigen::Index L) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd c(L);
    c[0] = std::abs(dist(rng)) + 0.5;
    for (Eigen::Index m = 1; m <= L / 2; ++m) {
        const double v = dist(rng);
        c[m] = v;
        c[L - m] = v;
    }
    return c;
}

/// The synthetic AM-FM benchmark signal: an amplitude-modulated tone at
/// normalized frequency 0.1 plus a chirp sweeping 0.01..0.05, 10 seconds
/// at 1000 samples/s. Returns (x, x1, x2) with x = x1 + x2.
struct AmFmSignal {
    Eigen::VectorXd x;
    Eigen::VectorXd x1;
    Eigen::VectorXd x2;
};

inline AmFmSignal amfm_signal() {
    const Eigen::Index n = 10000; // T = 10 s, fs = 1000
    AmFmSignal s;
    s.x.resize(n);
    s.x1.resize(n);
    s.x2.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = static_cast<double>(i + 1);
        const double a1 = 1.0 + 0.3 * std::cos(2.0 * M_PI / 1000.0 * t);
        const double x1 = a1 * std::sin(2.0 * M_PI / 10.0 * t);
        const double a2 = 0.2 + 0.1 * std::cos(2.0 * M_PI / 200.0 * t);
        const double w2 = 2.0 * M_PI / 100.0 + 2.0 * M_PI / 25.0 * t / 20000.0;
        const double x2 = a2 * std::sin(w2 * t);
        s.x1[i] = x1;
        s.x2[i] = x2;
        s.x[i] = x1 + x2;
    }
    return s;
}

/// A 610-sample monthly "economic-like" log-level series built from grid
/// sinusoids of the L=288 frequency lattice: a constant level,
/// business-cycle oscillations (k=5,10), and seasonal harmonics (k=25,49).
/// Exponentiate for a positive raw series.
inline Eigen::VectorXd economic_log_signal() {
    struct Tone {
        int k;
        double amplitude;
        double phase;
    };
    const Tone tones[] = {
        {5, 0.08, 1.3},
        {10, 0.05, 4.0},
        {25, 0.12, 0.4},
        {49, 0.04, 2.8},
    };
    const Eigen::Index n = 610;
    const double L = 288.0;
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = static_cast<double>(i + 1);
        double acc = 9.0;
        for (const auto& tone : tones) {
            acc += tone.amplitude *
                   std::sin(2.0 * M_PI * (tone.k - 1) * t / L + tone.phase);
        }
        v[i] = acc;
    }
    return v;
}

inline std::filesystem::path make_temp_dir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    const auto base = std::filesystem::temp_directory_path();
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto dir = base / (tag + "-" + std::to_string(rng()));
        if (std::filesystem::create_directories(dir)) {
            return dir;
        }
    }
    throw std::runtime_error("cannot create temp dir");
}

inline void write_csv(const std::filesystem::path& path, const Eigen::VectorXd& x,
                      const std::string& header = "") {
    std::ofstream out(path);
    if (!header.empty()) {
        out << header << "\n";
    }
    char buf[40];
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", x[i]);
        out << buf << "\n";
    }
}

inline void write_pcm16_wav(const std::filesystem::path& path,
                            const std::vector<int16_t>& samples, uint32_t rate = 8000,
                            uint16_t channels = 1) {
    const uint32_t data_size = static_cast<uint32_t>(samples.size() * 2);
    const uint32_t riff_size = 36 + data_size;
    const uint32_t byte_rate = rate * channels * 2;
    const uint16_t block_align = channels * 2;

    std::ofstream out(path, std::ios::binary);
    auto u32 = [&](uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
    auto u16 = [&](uint16_t v) { out.write(reinterpret_cast<const char*>(&v), 2); };
    out.write("RIFF", 4);
    u32(riff_size);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    u32(16);
    u16(1); // PCM
    u16(channels);
    u32(rate);
    u32(byte_rate);
    u16(block_align);
    u16(16); // bits
    out.write("data", 4);
    u32(data_size);
    for (int16_t s : samples) {
        out.write(reinterpret_cast<const char*>(&s), 2);
    }
}

} // namespace testsup

#endif
