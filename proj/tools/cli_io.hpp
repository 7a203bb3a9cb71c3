#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace barker::cli {

// Bad flags, arguments or inputs; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

// Tokens that look like sign sequences ("--+", "-1,1") would be taken for
// options by the parser. They are tagged with this prefix before parsing and
// stripped again when read.
inline constexpr char kSequenceTag = '\x1f';
// Values of the options in `value_options` (e.g. "--indent -1") are left alone.
std::vector<std::string> protect_sequence_args(int argc, char** argv, const std::set<std::string>& value_options);

struct InputRecord {
    std::string source;  // "inline", "stdin" or the file path
    std::string sha256;
};

std::string sha256_hex(const std::string& bytes);

struct RunContext {
    Format format = Format::Text;
    bool manifest = false;
    bool timing = false;
    bool quiet = false;
    int workers = 0;
    std::optional<unsigned long long> seed;
    std::string output_path;
    std::vector<std::string> command_line;

    std::vector<InputRecord> inputs;
    std::vector<std::string> extra_outputs;  // files written besides the main output
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    // Inline text, "@path" or "-" for stdin; the raw bytes are digested.
    std::string read_input(const std::string& arg);
    std::string read_file(const std::string& path);
    void progress(const std::string& line) const;
};

// Writes the main output to stdout or --output, then the manifest if asked.
void emit(RunContext& ctx, const std::string& output);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace barker::cli
