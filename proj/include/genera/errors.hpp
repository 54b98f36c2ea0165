#pragma once

#include <stdexcept>
#include <string>

namespace genera {

// Malformed text input (polynomial syntax, data files, fan files).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid or incomplete data (bad stratification, missing
// fiber entries, basis mismatch).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal exactness assertion failed, e.g. a (1+y)-denominator survives
// where the result is required to live in Z[y,y^-1].
struct arithmetic_error : std::runtime_error {
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace genera
