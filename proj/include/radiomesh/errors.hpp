#pragma once

#include <stdexcept>
#include <string>

namespace radiomesh {

/// Bad argument: out-of-range index, zero order, malformed input.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A formula or construction was asked for the wrong parity of m.
class ParityError : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

/// Formula evaluated outside the parameter range where it is defined.
class DomainError : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

/// Graph is not connected, so diameter and radio constraints are undefined.
class DisconnectedGraph : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance too large for the requested exhaustive method.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller broke a precondition (labeling over the wrong graph, non-permutation plan).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace radiomesh
