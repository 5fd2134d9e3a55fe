#pragma once

#include <stdexcept>
#include <string>

namespace qhecke {

// Raised when an internal invariant of the series machinery breaks. These never
// fire on valid input; the CLI maps them to exit code 3.
class InternalAssertion : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SupportOverflow : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

class InexactDivision : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

class HalfIntegerExponent : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

class NonTerminating : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

class NegativeExponent : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

// Attempt to invert a series whose constant term is not a unit monomial.
class NonUnitConstantTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnknownIdentity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownSeriesId : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OracleCapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NotInRegion : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qhecke
