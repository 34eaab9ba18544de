#pragma once

#include <stdexcept>
#include <string>

namespace dao {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text: scenario files, decimal/rational literals.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

// A violated precondition or data invariant; the message names it.
class invariant_error : public error {
public:
    explicit invariant_error(const std::string& what) : error(what) {}
};

// A price above the willingness to pay was offered to an allocation rule.
class losing_price_error : public error {
public:
    explicit losing_price_error(const std::string& what) : error(what) {}
};

} // namespace dao
