#include "cli_io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#ifndef BARKER_VERSION
#define BARKER_VERSION "0.0.0"
#endif

namespace barker::cli {

namespace {

bool looks_like_sequence(const std::string& s) {
    if (s.size() < 2 || s[0] != '-' || s == "--") return false;
    if (s[1] == '0' || s[1] == '1') return s.find_first_not_of("+-01, \t") == std::string::npos;
    bool plus_or_comma = false;
    for (char ch : s) {
        if (ch == '+' || ch == ',') plus_or_comma = true;
        else if (ch != '-' && ch != '0' && ch != '1' && ch != ' ' && ch != '\t') return false;
    }
    // "---" and longer runs of '-' are sequences too.
    const bool all_minus = s.find_first_not_of('-') == std::string::npos;
    return plus_or_comma || (all_minus && s.size() >= 3);
}

std::string strip_tag(const std::string& s) {
    return !s.empty() && s[0] == kSequenceTag ? s.substr(1) : s;
}

}  // namespace

std::vector<std::string> protect_sequence_args(int argc, char** argv, const std::set<std::string>& value_options) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(argc));
    bool after_separator = false;
    for (int i = 0; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--" && !after_separator) after_separator = true;
        else if (i > 0 && !after_separator && !value_options.count(argv[i - 1]) && looks_like_sequence(a))
            a.insert(a.begin(), kSequenceTag);
        out.push_back(std::move(a));
    }
    return out;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: digest failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

std::string RunContext::read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    inputs.push_back({path, sha256_hex(bytes)});
    return bytes;
}

std::string RunContext::read_input(const std::string& raw) {
    const std::string arg = strip_tag(raw);
    if (arg == "-") {
        std::string bytes((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        inputs.push_back({"stdin", sha256_hex(bytes)});
        return bytes;
    }
    if (!arg.empty() && arg[0] == '@') return read_file(arg.substr(1));
    inputs.push_back({"inline", sha256_hex(arg)});
    return arg;
}

void RunContext::progress(const std::string& line) const {
    if (!quiet) std::cerr << line << '\n';
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << bytes;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void emit(RunContext& ctx, const std::string& output) {
    if (ctx.output_path.empty()) {
        std::cout << output << std::flush;
    } else {
        write_file(ctx.output_path, output);
    }
    if (!ctx.manifest) return;

    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.started).count();
    nlohmann::ordered_json m;
    m["command_line"] = ctx.command_line;
    m["version"] = BARKER_VERSION;
    m["seed"] = ctx.seed ? nlohmann::ordered_json(*ctx.seed) : nlohmann::ordered_json(nullptr);
    auto inputs = nlohmann::ordered_json::array();
    for (const auto& in : ctx.inputs) inputs.push_back({{"source", in.source}, {"sha256", in.sha256}});
    m["inputs"] = inputs;
    m["timing"] = {{"wall_time_s", elapsed}};
    auto outputs = nlohmann::ordered_json::array();
    outputs.push_back({{"path", ctx.output_path}, {"sha256", sha256_hex(output)}});
    for (const auto& path : ctx.extra_outputs) {
        std::ifstream in(path, std::ios::binary);
        std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        outputs.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
    }
    m["outputs"] = outputs;
    write_file(ctx.output_path + ".manifest.json", m.dump(2) + "\n");
}

}  // namespace barker::cli
