#pragma once

#include <istream>
#include <string>
#include <vector>

#include "hfree/errors.hpp"

namespace hfree::detail {

// Reads newline-terminated lines; a final line without '\n' is an error so
// that the serialized formats stay byte-exact.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        if (!std::getline(in_, line)) return false;
        if (in_.eof()) throw ParseError("missing trailing newline");
        ++lineno_;
        return true;
    }

    int lineno() const { return lineno_; }

private:
    std::istream& in_;
    int lineno_ = 0;
};

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= line.size()) {
        size_t sp = line.find(' ', pos);
        if (sp == std::string::npos) sp = line.size();
        out.push_back(line.substr(pos, sp - pos));
        pos = sp + 1;
    }
    return out;
}

inline long long parse_int(const std::string& tok, const char* what) {
    if (tok.empty() || tok.size() > 18)
        throw ParseError(std::string("bad integer for ") + what);
    long long v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw ParseError(std::string("bad integer for ") + what);
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace hfree::detail
