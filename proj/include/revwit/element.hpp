#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "revwit/big.hpp"

namespace revwit {

// A point of a countable structure: canonical string encoding plus its position
// in the structure's fixed enumeration.
struct Element {
    std::string enc;
    Big index;

    bool operator==(const Element& o) const { return enc == o.enc; }
    bool operator!=(const Element& o) const { return enc != o.enc; }
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& m) : std::runtime_error(m) {}
};

// Raised when a strategy cannot honour its own postconditions; signals a
// construction bug rather than bad input.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& m) : std::runtime_error(m) {}
};

struct SeedError : std::runtime_error {
    explicit SeedError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace revwit
