#pragma once

#include <stdexcept>
#include <string>

namespace k33lab
{

// An operation was handed an input that violates its precondition.
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// The planar coefficient basis does not reach far enough for the request.
class BasisError : public std::runtime_error
{
public:
    BasisError(const std::string &what, int first_missing_n)
        : std::runtime_error(what), first_missing_n_(first_missing_n)
    {
    }

    int first_missing_n() const noexcept
    {
        return first_missing_n_;
    }

private:
    int first_missing_n_;
};

// A search or enumeration was asked to run past its cost guard.
class SizeLimitError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input; line is 1-based, 0 when the problem is not tied to one line.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &source, int line, const std::string &message)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line)
    {
    }

    int line() const noexcept
    {
        return line_;
    }

private:
    int line_;
};

// A class-valued series came out with a fractional or negative count.
class IntegralityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace k33lab
