#pragma once

#include <stdexcept>
#include <string>

namespace ddrsim {

/// Base for every error the simulator raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid experiment or geometry parameters.
class ConfigError : public Error {
public:
    using Error::Error;
};

class OutOfField : public Error {
public:
    using Error::Error;
};

/// A round plan references nodes that are not alive, or its relay graph is cyclic.
class PlanStateMismatch : public Error {
public:
    using Error::Error;
};

class EmptyTrace : public Error {
public:
    using Error::Error;
};

class InvalidPopulation : public Error {
public:
    using Error::Error;
};

/// Analysis was asked to compare incompatible configurations.
class ConfigMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed trace CSV, summary JSON or config text.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ddrsim
