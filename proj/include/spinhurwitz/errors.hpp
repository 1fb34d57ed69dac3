#pragma once

#include <stdexcept>
#include <string>

namespace spinhurwitz {

/// Bad arguments: malformed partitions, degree mismatches, illegal (genus, parity) queries.
class invalid_input_error : public std::invalid_argument {
public:
    explicit invalid_input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A request exceeded a configured enumeration or convolution bound.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// An identity that is guaranteed by the algebra's structure failed to hold.
/// Seeing this means a bug upstream (wrong structure constants, broken enumeration),
/// never a property of the input.
class internal_consistency_error : public std::logic_error {
public:
    explicit internal_consistency_error(const std::string& what) : std::logic_error(what) {}
};

/// Cobordism-expression syntax error, with 1-based source position.
class parse_error : public invalid_input_error {
public:
    parse_error(const std::string& what, int line, int column)
        : invalid_input_error(what + " (line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace spinhurwitz
