#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oopred {

// Input-side failures: malformed text, unresolved references, bad files,
// schema violations. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public InputError {
public:
    ParseError(int line, int col, const std::string& msg)
        : InputError("line " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Interpreter faults (null dereference, uninitialized register, ...).
// The CLI maps these to exit code 3.
class RuntimeFault : public std::runtime_error {
public:
    RuntimeFault(std::string method, int instr_index, const std::string& msg)
        : std::runtime_error(method + ": instruction " + std::to_string(instr_index) + ": " + msg),
          method_(std::move(method)), instr_index_(instr_index) {}

    const std::string& method() const { return method_; }
    int instr_index() const { return instr_index_; }

private:
    std::string method_;
    int instr_index_;
};

// Deterministic RNG. mt19937_64 output is fixed by the standard, and all
// derived draws below avoid std::*_distribution (whose results are
// implementation-defined), so sequences are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // Uniform in [0, n). Modulo bias is irrelevant at the ranges used here.
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : eng_() % n; }

    // Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1).
    double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return real01() < p; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
        }
    }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Named sub-seed so every pipeline stage draws from an independent,
// reproducible stream rooted at one master seed.
inline std::uint64_t sub_seed(std::uint64_t master, std::string_view stage, std::uint64_t index = 0) {
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (char c : stage) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return splitmix64(master ^ splitmix64(h ^ splitmix64(index)));
}

// Shortest decimal form that round-trips to the same double. Deterministic
// and locale-independent, so emitted files are byte-stable.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Write via temp file + rename so readers never observe partial content.
inline void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw InputError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace oopred
