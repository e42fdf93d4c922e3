#pragma once

#include <stdexcept>
#include <string>

namespace rauzy {

/// Base class for all library errors. CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotProlongable : public Error {
public:
    using Error::Error;
};

class Stagnation : public Error {
public:
    using Error::Error;
};

class EmptyPattern : public Error {
public:
    using Error::Error;
};

class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class CapExceedsWord : public Error {
public:
    using Error::Error;
};

class OutOfWindow : public Error {
public:
    using Error::Error;
};

class MissingFrequency : public Error {
public:
    using Error::Error;
};

class Degenerate : public Error {
public:
    using Error::Error;
};

class NotReversalClosed : public Error {
public:
    NotReversalClosed(const std::string& what, std::string witness_factor)
        : Error(what), witness(std::move(witness_factor)) {}
    std::string witness;  // rendered factor whose reversal is missing
};

class NotClosedUnderPermutation : public Error {
public:
    NotClosedUnderPermutation(const std::string& what, std::string witness_factor)
        : Error(what), witness(std::move(witness_factor)) {}
    std::string witness;
};

class NotPrimitive : public Error {
public:
    using Error::Error;
};

class UnsupportedEigenvalueDegree : public Error {
public:
    using Error::Error;
};

class NonRecurrentWindow : public Error {
public:
    using Error::Error;
};

class NotSturmianWindow : public Error {
public:
    using Error::Error;
};

class Inconclusive : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class WindowIncomplete : public Error {
public:
    using Error::Error;
};

}  // namespace rauzy
