#include "cissa/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cissa/errors.hpp"
#include "cissa/version.hpp"

namespace cissa {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool parse_double(const std::string& token, double& out) {
    const std::string t = trim(token);
    if (t.empty()) {
        return false;
    }
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size() && std::isfinite(out);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

TimeSeries read_csv(const InputSpec& spec) {
    std::ifstream in(spec.path);
    if (!in) {
        throw InputError("cannot open " + spec.path);
    }
    if (spec.column < 1) {
        throw ParameterError("column index must be >= 1");
    }

    std::vector<double> values;
    std::string line;
    long line_no = 0;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (static_cast<std::size_t>(spec.column) > fields.size()) {
            throw InputError(spec.path + ":" + std::to_string(line_no) +
                             ": column " + std::to_string(spec.column) +
                             " out of range (row has " +
                             std::to_string(fields.size()) + " fields)");
        }
        double v;
        const bool ok = parse_double(fields[spec.column - 1], v);
        if (!ok) {
            // First line that fails to parse is a header when autodetecting
            // (or when the caller said there is one).
            const bool may_be_header =
                first_data_line && (!spec.header.has_value() || *spec.header);
            if (may_be_header) {
                first_data_line = false;
                continue;
            }
            throw InputError(spec.path + ":" + std::to_string(line_no) +
                             ": cannot parse '" + trim(fields[spec.column - 1]) +
                             "' as a finite number");
        }
        if (first_data_line && spec.header.has_value() && *spec.header) {
            // Caller insists on a header even though the line parses.
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        values.push_back(v);
    }
    if (values.empty()) {
        throw InputError(spec.path + ": no samples found");
    }

    TimeSeries ts;
    ts.values = Eigen::Map<Eigen::VectorXd>(values.data(),
                                            static_cast<Eigen::Index>(values.size()));
    return ts;
}

uint32_t rd_u32(const std::vector<unsigned char>& b, std::size_t at) {
    return static_cast<uint32_t>(b[at]) | (static_cast<uint32_t>(b[at + 1]) << 8) |
           (static_cast<uint32_t>(b[at + 2]) << 16) |
           (static_cast<uint32_t>(b[at + 3]) << 24);
}

uint16_t rd_u16(const std::vector<unsigned char>& b, std::size_t at) {
    return static_cast<uint16_t>(static_cast<uint16_t>(b[at]) |
                                 (static_cast<uint16_t>(b[at + 1]) << 8));
}

TimeSeries read_wav(const InputSpec& spec) {
    std::ifstream in(spec.path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + spec.path);
    }
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
        throw InputError(spec.path + ": not a RIFF/WAVE file");
    }

    bool have_fmt = false;
    uint16_t format = 0, channels = 0, bits = 0;
    uint32_t sample_rate = 0;
    std::size_t data_at = 0, data_size = 0;

    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
        const uint32_t size = rd_u32(bytes, pos + 4);
        const std::size_t body = pos + 8;
        if (body + size > bytes.size()) {
            throw InputError(spec.path + ": truncated WAV chunk");
        }
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (size < 16) {
                throw InputError(spec.path + ": malformed fmt chunk");
            }
            format = rd_u16(bytes, body);
            channels = rd_u16(bytes, body + 2);
            sample_rate = rd_u32(bytes, body + 4);
            bits = rd_u16(bytes, body + 14);
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            data_at = body;
            data_size = size;
        }
        pos = body + size + (size % 2); // chunks are word-aligned
    }

    if (!have_fmt || data_at == 0) {
        throw InputError(spec.path + ": missing fmt or data chunk");
    }
    if (format != 1 || bits != 16) {
        throw InputError(spec.path + ": unsupported WAV encoding (need PCM 16-bit, got format=" +
                         std::to_string(format) + ", bits=" + std::to_string(bits) + ")");
    }
    if (channels != 1) {
        throw InputError(spec.path + ": only mono WAV is supported (got " +
                         std::to_string(channels) + " channels)");
    }

    const std::size_t n = data_size / 2;
    if (n == 0) {
        throw InputError(spec.path + ": no samples found");
    }
    TimeSeries ts;
    ts.values.resize(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto raw = static_cast<int16_t>(rd_u16(bytes, data_at + 2 * i));
        ts.values[static_cast<Eigen::Index>(i)] = static_cast<double>(raw) / 32768.0;
    }
    ts.sample_rate = static_cast<double>(sample_rate);
    return ts;
}

InputFormat resolve_format(const InputSpec& spec) {
    if (spec.format != InputFormat::Auto) {
        return spec.format;
    }
    const std::string ext = fs::path(spec.path).extension().string();
    return (ext == ".wav" || ext == ".WAV") ? InputFormat::Wav : InputFormat::Csv;
}

std::string mode_name(const ExtensionMode& mode) {
    switch (mode.kind) {
    case ExtensionKind::Ar:
        return "ar";
    case ExtensionKind::Mirror:
        return "mirror";
    case ExtensionKind::None:
        return "none";
    }
    return "ar";
}

ExtensionMode mode_from_name(const std::string& name, std::optional<int> ar_order) {
    if (name == "ar") {
        return ExtensionMode::ar(ar_order);
    }
    if (name == "mirror") {
        return ExtensionMode::mirror();
    }
    if (name == "none") {
        return ExtensionMode::none();
    }
    throw ParameterError("unknown extension mode '" + name + "' (want ar|mirror|none)");
}

} // namespace

TimeSeries read_series(const InputSpec& spec) {
    TimeSeries ts = resolve_format(spec) == InputFormat::Wav ? read_wav(spec)
                                                             : read_csv(spec);
    if (spec.log_transform) {
        for (Eigen::Index i = 0; i < ts.values.size(); ++i) {
            if (!(ts.values[i] > 0.0)) {
                throw InputError(spec.path + ": sample " + std::to_string(i + 1) +
                                 " is " + format_g17(ts.values[i]) +
                                 "; log transform needs positive values");
            }
            ts.values[i] = std::log(ts.values[i]);
        }
    }
    return ts;
}

void write_decomposition(const Decomposition& dec, const fs::path& dir) {
    fs::create_directories(dir);

    {
        std::ofstream out(dir / "components.csv");
        if (!out) {
            throw InputError("cannot write " + (dir / "components.csv").string());
        }
        for (Eigen::Index k = 1; k <= dec.F(); ++k) {
            char head[48];
            std::snprintf(head, sizeof(head), "k=%lld (w=%.6f)",
                          static_cast<long long>(k),
                          grid_frequency(static_cast<int>(k), dec.L));
            out << (k > 1 ? "," : "") << head;
        }
        out << "\n";
        for (Eigen::Index t = 0; t < dec.T(); ++t) {
            for (Eigen::Index c = 0; c < dec.F(); ++c) {
                out << (c > 0 ? "," : "") << format_g17(dec.Z(t, c));
            }
            out << "\n";
        }
    }
    {
        std::ofstream out(dir / "psd.csv");
        if (!out) {
            throw InputError("cannot write " + (dir / "psd.csv").string());
        }
        out << "k,w,lambda\n";
        for (Eigen::Index k = 1; k <= dec.L; ++k) {
            out << k << "," << format_g17(dec.psd.frequency(static_cast<int>(k)))
                << "," << format_g17(dec.psd.lambda[k - 1]) << "\n";
        }
    }
    {
        json meta;
        meta["T"] = dec.T();
        meta["L"] = dec.L;
        meta["F"] = dec.F();
        meta["extension"] = mode_name(dec.mode);
        if (dec.mode.kind == ExtensionKind::Ar && dec.mode.ar_order_override) {
            meta["ar_order"] = *dec.mode.ar_order_override;
        }
        meta["version"] = kVersion;
        std::ofstream out(dir / "meta.json");
        if (!out) {
            throw InputError("cannot write " + (dir / "meta.json").string());
        }
        out << meta.dump(2) << "\n";
    }
}

Decomposition read_decomposition(const fs::path& dir) {
    json meta;
    {
        std::ifstream in(dir / "meta.json");
        if (!in) {
            throw InputError("cannot open " + (dir / "meta.json").string());
        }
        try {
            in >> meta;
        } catch (const json::exception& e) {
            throw InputError((dir / "meta.json").string() + ": " + e.what());
        }
    }
    Decomposition dec;
    try {
        dec.L = meta.at("L").get<Eigen::Index>();
        std::optional<int> ar_order;
        if (meta.contains("ar_order")) {
            ar_order = meta["ar_order"].get<int>();
        }
        dec.mode = mode_from_name(meta.at("extension").get<std::string>(), ar_order);
    } catch (const json::exception& e) {
        throw InputError((dir / "meta.json").string() + ": " + e.what());
    }

    {
        std::ifstream in(dir / "psd.csv");
        if (!in) {
            throw InputError("cannot open " + (dir / "psd.csv").string());
        }
        std::string line;
        std::getline(in, line); // header
        std::vector<double> lambda;
        long line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            if (trim(line).empty()) {
                continue;
            }
            const auto fields = split_csv_line(line);
            double v;
            if (fields.size() < 3 || !parse_double(fields[2], v)) {
                throw InputError((dir / "psd.csv").string() + ":" +
                                 std::to_string(line_no) + ": malformed row");
            }
            lambda.push_back(v);
        }
        if (static_cast<Eigen::Index>(lambda.size()) != dec.L) {
            throw InputError((dir / "psd.csv").string() + ": expected " +
                             std::to_string(dec.L) + " rows, got " +
                             std::to_string(lambda.size()));
        }
        dec.psd.lambda = Eigen::Map<Eigen::VectorXd>(
            lambda.data(), static_cast<Eigen::Index>(lambda.size()));
    }

    {
        std::ifstream in(dir / "components.csv");
        if (!in) {
            throw InputError("cannot open " + (dir / "components.csv").string());
        }
        std::string line;
        if (!std::getline(in, line)) {
            throw InputError((dir / "components.csv").string() + ": empty file");
        }
        const Eigen::Index F = static_cast<Eigen::Index>(split_csv_line(line).size());
        std::vector<double> cells;
        Eigen::Index rows = 0;
        long line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            if (trim(line).empty()) {
                continue;
            }
            const auto fields = split_csv_line(line);
            if (static_cast<Eigen::Index>(fields.size()) != F) {
                throw InputError((dir / "components.csv").string() + ":" +
                                 std::to_string(line_no) + ": expected " +
                                 std::to_string(F) + " fields");
            }
            for (const auto& f : fields) {
                double v;
                if (!parse_double(f, v)) {
                    throw InputError((dir / "components.csv").string() + ":" +
                                     std::to_string(line_no) + ": cannot parse '" +
                                     trim(f) + "'");
                }
                cells.push_back(v);
            }
            ++rows;
        }
        if (rows == 0) {
            throw InputError((dir / "components.csv").string() + ": no data rows");
        }
        dec.Z.resize(rows, F);
        for (Eigen::Index t = 0; t < rows; ++t) {
            for (Eigen::Index c = 0; c < F; ++c) {
                dec.Z(t, c) = cells[static_cast<std::size_t>(t * F + c)];
            }
        }
    }
    return dec;
}

void write_grouping(const GroupingResult& gr, const fs::path& dir) {
    fs::create_directories(dir);
    const Eigen::Index G = gr.rc.cols();

    {
        std::ofstream out(dir / "groups.csv");
        if (!out) {
            throw InputError("cannot write " + (dir / "groups.csv").string());
        }
        for (Eigen::Index g = 0; g < G; ++g) {
            out << (g > 0 ? "," : "") << gr.names[static_cast<std::size_t>(g)];
        }
        out << "\n";
        for (Eigen::Index t = 0; t < gr.rc.rows(); ++t) {
            for (Eigen::Index g = 0; g < G; ++g) {
                out << (g > 0 ? "," : "") << format_g17(gr.rc(t, g));
            }
            out << "\n";
        }
    }
    {
        std::ofstream out(dir / "shares.csv");
        if (!out) {
            throw InputError("cannot write " + (dir / "shares.csv").string());
        }
        out << "group,share,share_pct\n";
        for (Eigen::Index g = 0; g < G; ++g) {
            char pct[32];
            std::snprintf(pct, sizeof(pct), "%.1f", 100.0 * gr.sh[g]);
            out << gr.names[static_cast<std::size_t>(g)] << ","
                << format_g17(gr.sh[g]) << "," << pct << "\n";
        }
    }
    {
        json doc;
        doc["names"] = gr.names;
        doc["kg"] = gr.kg;
        std::ofstream out(dir / "kg.json");
        if (!out) {
            throw InputError("cannot write " + (dir / "kg.json").string());
        }
        out << doc.dump(2) << "\n";
    }
}

GroupingSpec parse_group_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ParameterError("grouping spec '" + text +
                             "' must look like kind:value (economic:12, "
                             "manual:@groups.json, share:0.80, percentile:0.95)");
    }
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);

    if (kind == "economic") {
        char* end = nullptr;
        const long v = std::strtol(arg.c_str(), &end, 10);
        if (end != arg.c_str() + arg.size() || v < 1) {
            throw ParameterError("economic grouping needs a positive integer, got '" +
                                 arg + "'");
        }
        return GroupingSpec::economic(static_cast<int>(v));
    }
    if (kind == "share" || kind == "percentile") {
        double v;
        if (!parse_double(arg, v) || !(v > 0.0 && v < 1.0)) {
            throw ParameterError(kind + " grouping needs a number in (0,1), got '" +
                                 arg + "'");
        }
        return kind == "share" ? GroupingSpec::cumulative_share(v)
                               : GroupingSpec::psd_percentile(v);
    }
    if (kind == "manual") {
        json doc;
        if (!arg.empty() && arg[0] == '@') {
            const std::string path = arg.substr(1);
            std::ifstream in(path);
            if (!in) {
                throw InputError("cannot open group file " + path);
            }
            try {
                in >> doc;
            } catch (const json::exception& e) {
                throw InputError(path + ": " + e.what());
            }
        } else {
            try {
                doc = json::parse(arg);
            } catch (const json::exception&) {
                throw ParameterError("manual grouping needs '@file.json' or an "
                                     "inline JSON array, got '" + arg + "'");
            }
        }
        if (doc.is_object() && doc.contains("groups")) {
            doc = doc["groups"];
        }
        if (!doc.is_array()) {
            throw InputError("manual group document must be an array of index arrays");
        }
        std::vector<std::vector<int>> groups;
        for (const auto& g : doc) {
            if (!g.is_array()) {
                throw InputError("manual group document must be an array of index arrays");
            }
            std::vector<int> set;
            for (const auto& v : g) {
                if (!v.is_number_integer()) {
                    throw InputError("group indexes must be integers");
                }
                set.push_back(v.get<int>());
            }
            groups.push_back(std::move(set));
        }
        return GroupingSpec::manual(std::move(groups));
    }
    throw ParameterError("unknown grouping kind '" + kind +
                         "' (want economic|manual|share|percentile)");
}

} // namespace cissa
