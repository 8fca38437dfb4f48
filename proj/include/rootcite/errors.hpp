#pragma once

#include <stdexcept>
#include <string>

namespace rootcite {

/// Base class for all data and usage errors raised by the library.
/// The CLI maps these to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyStringError : Error {
    EmptyStringError() : Error("empty string") {}
};

struct EmptyShingleSetError : Error {
    EmptyShingleSetError() : Error("empty shingle set") {}
};

struct SignatureMismatchError : Error {
    explicit SignatureMismatchError(const std::string& what) : Error(what) {}
};

struct EmptyInputError : Error {
    explicit EmptyInputError(const std::string& what) : Error(what) {}
};

struct InvertedRangeError : Error {
    explicit InvertedRangeError(const std::string& what) : Error(what) {}
};

struct PathIsFileError : Error {
    explicit PathIsFileError(const std::string& what) : Error(what) {}
};

struct PermissionDeniedError : Error {
    explicit PermissionDeniedError(const std::string& what) : Error(what) {}
};

struct NoInputFilesError : Error {
    explicit NoInputFilesError(const std::string& what) : Error(what) {}
};

struct EmptyStoreError : Error {
    explicit EmptyStoreError(const std::string& what) : Error(what) {}
};

struct StoreFormatError : Error {
    explicit StoreFormatError(const std::string& what) : Error(what) {}
};

struct MissingLayoutError : Error {
    explicit MissingLayoutError(const std::string& what) : Error(what) {}
};

}  // namespace rootcite
