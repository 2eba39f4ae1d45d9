#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ratknot {

enum class errc {
    invalid_argument = 1,  // failed precondition or malformed value
    domain = 2,            // operation mathematically undefined here
    overflow = 3,          // exact 64-bit arithmetic would wrap
    parse = 4,             // malformed textual input
    unsupported = 5,       // outside the implemented classification range
};

class Error : public std::runtime_error {
public:
    Error(errc code, std::string what)
        : std::runtime_error(std::move(what)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace ratknot
