#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace repglt {

// All library failures carry a stable machine-readable code that the CLI
// surfaces verbatim. Codes in use: "argument", "domain", "size",
// "composition", "field-mismatch", "truncation-exceeded", "classification",
// "construction", "json", "usage".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, const char* code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace repglt
