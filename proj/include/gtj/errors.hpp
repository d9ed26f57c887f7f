#pragma once

#include <stdexcept>
#include <string>

namespace gtj {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct AllZeroSeed : std::invalid_argument {
    explicit AllZeroSeed(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidQ : std::invalid_argument {
    explicit InvalidQ(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateRatio : std::domain_error {
    explicit DegenerateRatio(const std::string& what) : std::domain_error(what) {}
};

struct BadRange : std::invalid_argument {
    explicit BadRange(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownIdentity : std::invalid_argument {
    explicit UnknownIdentity(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gtj
