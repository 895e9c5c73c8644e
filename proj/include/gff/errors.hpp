#ifndef GFF_ERRORS_HPP
#define GFF_ERRORS_HPP

#include <sstream>
#include <stdexcept>
#include <string>

namespace gff {

// Base of all library errors. Subclasses prefix the message with their own
// name so CLI diagnostics stay one line and greppable.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what)
        : Error("DimensionMismatch: " + what) {}
};

// All columns of a spanning set deflated to zero: the span is the zero
// subspace, which callers must handle explicitly.
class EmptySpan : public Error {
public:
    explicit EmptySpan(const std::string& what) : Error("EmptySpan: " + what) {}
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& what)
        : Error("NotHermitian: " + what) {}
};

class NotAFrame : public Error {
public:
    explicit NotAFrame(double lambda_min)
        : Error("NotAFrame: lambda_min=" + format(lambda_min)) {}

private:
    static std::string format(double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }
};

// Local spaces of paired components differ, so Lambda_i^* Lambda'_i is
// undefined.
class LocalSpaceMismatch : public Error {
public:
    explicit LocalSpaceMismatch(const std::string& what)
        : Error("LocalSpaceMismatch: " + what) {}
};

class NonPositiveWeight : public Error {
public:
    explicit NonPositiveWeight(const std::string& what)
        : Error("NonPositiveWeight: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

class BadParams : public Error {
public:
    explicit BadParams(const std::string& what) : Error("BadParams: " + what) {}
};

// Assembled product would exceed the configured element budget
// (GFF_MAX_ELEMENTS).
class SizeLimit : public Error {
public:
    explicit SizeLimit(const std::string& what) : Error("SizeLimit: " + what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("IoError: " + what) {}
};

}  // namespace gff

#endif  // GFF_ERRORS_HPP
