#pragma once

#include <stdexcept>
#include <string>

namespace sqnmr {

// configuration / argument problems -> CLI exit code 1
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// violated numerical preconditions (e.g. MSV misalignment) -> CLI exit code 2
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sqnmr
