#pragma once

#include <stdexcept>
#include <string>

namespace perfgrp {

// Malformed user input: bad permutation, bad file line, arity mismatch.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured element cap.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget (raise the cap and retry).
class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A claimed homomorphism or certificate does not check out.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Something that is guaranteed by theory failed; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace perfgrp
