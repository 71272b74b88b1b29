#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcolor {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input to a constructor (loops, out-of-range ids, malformed lists).
class GraphError : public Error {
public:
    using Error::Error;
};

// A generator emitted something that breaks the layering contract.
class GeneratorContractError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

// Coloring/graph/list domains disagree, or a coloring kind is unsuitable.
class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// A search or enumeration ran out of its configured budget. Never a wrong
// answer: the caller learns how far the work got.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, std::size_t last_refuted)
        : Error(what), last_refuted_(last_refuted) {}
    explicit ResourceError(const std::string& what) : Error(what) {}

    // Largest color count that was completely refuted before the budget ran
    // out (0 when nothing was refuted).
    std::size_t last_refuted() const noexcept { return last_refuted_; }

private:
    std::size_t last_refuted_ = 0;
};

// Malformed JSON/DOT document or a document that does not match its graph.
class SchemaError : public Error {
public:
    using Error::Error;
};

// A constructive procedure hit a configuration its argument does not cover.
class UnsupportedStructureError : public Error {
public:
    using Error::Error;
};

// Recoloring could not find a replacement color in a finite instance.
class ObstructionError : public Error {
public:
    using Error::Error;
};

// No coloring of the truncation at depth() exists.
class RefutationError : public Error {
public:
    RefutationError(const std::string& what, std::size_t depth) : Error(what), depth_(depth) {}
    std::size_t depth() const noexcept { return depth_; }

private:
    std::size_t depth_ = 0;
};

}  // namespace symcolor
