#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace oct {

// Instance file could not be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Input graph is outside the supported class; carries the induced-P5
// witness (0-based vertex ids, in path order).
class ClassRejection : public std::runtime_error {
public:
    explicit ClassRejection(const std::array<int, 5>& witness)
        : std::runtime_error("input graph contains an induced P5: " + describe(witness)),
          witness_(witness) {}
    const std::array<int, 5>& witness() const { return witness_; }

private:
    static std::string describe(const std::array<int, 5>& w) {
        std::string s;
        for (int v : w) {
            if (!s.empty()) s += ' ';
            s += std::to_string(v);
        }
        return s;
    }
    std::array<int, 5> witness_;
};

// An operation refused an input exceeding its size limit, attempt budget,
// or configured cap.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace oct
