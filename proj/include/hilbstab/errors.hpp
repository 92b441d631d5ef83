#pragma once

#include <stdexcept>
#include <string>

namespace hilbstab {

// Bad arguments handed to an operation (dimension mismatch, empty scan box,
// slope of a non-divisor, ...).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A surface document failed validation; `field` names the offending entry.
class validation_error : public std::runtime_error {
public:
    validation_error(std::string field_name, const std::string& what)
        : std::runtime_error("field '" + field_name + "': " + what),
          field(std::move(field_name)) {}

    std::string field;
};

// Lexer/parser failure for the cycle expression language. Columns are 1-based
// and always point inside the offending input.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int column_)
        : std::runtime_error(what + " (column " + std::to_string(column_) + ")"),
          column(column_) {}

    int column;
};

} // namespace hilbstab
