#ifndef CISSA_IO_HPP
#define CISSA_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "cissa/decompose.hpp"
#include "cissa/grouping.hpp"

namespace cissa {

struct TimeSeries {
    Eigen::VectorXd values;
    std::optional<double> sample_rate; // Hz, known for WAV input
};

enum class InputFormat {
    Auto, // decide from the file extension (.wav -> Wav, else Csv)
    Csv,
    Wav,
};

struct InputSpec {
    std::string path;
    InputFormat format = InputFormat::Auto;
    int column = 1;                    // 1-based, CSV only
    std::optional<bool> header;        // unset = autodetect from first line
    bool log_transform = false;        // natural log, rejects nonpositive values
};

/// Everything one CLI run needs beyond the input itself.
struct RunConfig {
    Eigen::Index L = 0;
    ExtensionMode extension;           // default AR
    std::optional<std::string> group_spec;
    std::filesystem::path output_dir;
};

/// Reads a CSV column or a PCM16 mono WAV file into doubles. WAV samples
/// are scaled to [-1, 1) by dividing by 32768.
TimeSeries read_series(const InputSpec& spec);

/// Writes components.csv (T x F, header "k=1 (w=0.000000)", ...),
/// psd.csv (k, w, lambda per row), and meta.json into dir. All numbers
/// are serialized at %.17g so they round-trip without drift.
void write_decomposition(const Decomposition& dec, const std::filesystem::path& dir);

/// Reads the files written by write_decomposition back into a Decomposition.
Decomposition read_decomposition(const std::filesystem::path& dir);

/// Writes groups.csv (one column per group), shares.csv, and kg.json.
void write_grouping(const GroupingResult& gr, const std::filesystem::path& dir);

/// Parses the grouping mini-language: "economic:12", "manual:@groups.json",
/// "manual:[[21],[3,4]]", "share:0.80", "percentile:0.95".
GroupingSpec parse_group_spec(const std::string& text);

/// Subcommand CLI: decompose / group / run. Returns the process exit code
/// (0 ok, 2 argument error, 3 input parse error, 4 numeric failure).
int cli_main(int argc, const char* const* argv);

} // namespace cissa

#endif
