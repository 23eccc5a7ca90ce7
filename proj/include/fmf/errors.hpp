#pragma once

#include <stdexcept>
#include <string>

namespace fmf {

// Bad caller-supplied data: wrong lengths, out-of-domain parameters,
// malformed files. The CLI maps these to exit code 1.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Valid request outside an operation's supported range (e.g. the Cech
// oracle past its desk-scale bounds).
class unsupported_range : public input_error {
public:
    explicit unsupported_range(const std::string& what) : input_error(what) {}
};

// A consistency check that can only fail if the engine itself is wrong.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace fmf
