#ifndef LPA_ERROR_HPP
#define LPA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lpa {

// Base for every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

class OutOfRegion : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

// A proven identity failed to hold (e.g. an exact division left a remainder).
// Never expected in practice; signals a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lpa

#endif  // LPA_ERROR_HPP
