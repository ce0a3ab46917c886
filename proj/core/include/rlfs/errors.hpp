#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rlfs {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- CSV ingestion ---

class MissingColumnError : public Error {
public:
    using Error::Error;
};

class NonNumericCellError : public Error {
public:
    NonNumericCellError(std::size_t row, std::size_t col, const std::string& msg)
        : Error(msg), row(row), col(col) {}
    std::size_t row;  // zero-based data row (header excluded)
    std::size_t col;  // zero-based column in the file
};

class MissingValueError : public Error {
public:
    MissingValueError(std::size_t row, std::size_t col, const std::string& msg)
        : Error(msg), row(row), col(col) {}
    std::size_t row;
    std::size_t col;
};

class UnknownLabelValueError : public Error {
public:
    UnknownLabelValueError(std::size_t row, const std::string& msg) : Error(msg), row(row) {}
    std::size_t row;
};

class TooFewRowsError : public Error {
public:
    using Error::Error;
};

class DegenerateSplitError : public Error {
public:
    using Error::Error;
};

// --- shared numeric contracts ---

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// --- classifier ---

class EmptyNodeError : public Error {
public:
    using Error::Error;
};

class EmptyTrainingSetError : public Error {
public:
    using Error::Error;
};

// --- environment / agents ---

class StepOnTerminalError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class MissingNextActionError : public Error {
public:
    using Error::Error;
};

// --- policy / oracle ---

class EmptySubsetError : public Error {
public:
    using Error::Error;
};

class TooManyFeaturesError : public Error {
public:
    using Error::Error;
};

// --- output ---

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace rlfs
