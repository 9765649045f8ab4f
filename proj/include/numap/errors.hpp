#ifndef NUMAP_ERRORS_HPP
#define NUMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace numap {

// Malformed external input (JSON structure, bad decimal literal, unknown name).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Rank, degree or dimension mismatch between otherwise well-formed values.
struct RankError : std::runtime_error {
    explicit RankError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace numap

#endif
