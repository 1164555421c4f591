#ifndef MONOLIN_ERRORS_HPP
#define MONOLIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monolin {

// Ambient variable counts never promote silently; mixing them is a bug in
// the caller.
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Precondition violations on mathematically meaningful inputs
// (regularity of the zero ideal, colon by the zero ideal, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what)
        : std::domain_error(what) {}
};

// A configured cap was exceeded.  Carries the cap so reports can show it.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& what, long cap)
        : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"),
          cap_(cap) {}
    long cap() const { return cap_; }

private:
    long cap_;
};

// Malformed input file or text; position is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace monolin

#endif
