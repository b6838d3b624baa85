#pragma once

#include <stdexcept>
#include <string>

namespace qpbw {

struct SymbolMismatch : std::runtime_error {
    explicit SymbolMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ValuationZero : std::runtime_error {
    explicit ValuationZero(const std::string& what) : std::runtime_error(what) {}
};

struct ValuationOrder : std::runtime_error {
    explicit ValuationOrder(const std::string& what) : std::runtime_error(what) {}
};

struct InexactLeadingDivision : std::runtime_error {
    explicit InexactLeadingDivision(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownIdentity : std::runtime_error {
    explicit UnknownIdentity(const std::string& what) : std::runtime_error(what) {}
};

struct NoApplicableRule : std::runtime_error {
    explicit NoApplicableRule(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRank : std::runtime_error {
    explicit IndexOutOfRank(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

}  // namespace qpbw
