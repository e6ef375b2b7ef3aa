#pragma once

#include <stdexcept>
#include <string>

namespace pcon {

/// Input could not be parsed (malformed graph6, edge list, coloring file, ...).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its stated preconditions
/// (wrong connectivity, degree bound, edge-count window, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// A bounded search ran out of its node or enumeration budget before
/// reaching a decision.  Distinct from "does not exist".
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// A structure that is guaranteed to exist for conforming inputs was not
/// found, or a constructed coloring failed its own verification.  Either
/// the input violated an unchecked assumption or there is a bug; never
/// silently ignored.
struct defect_error : std::runtime_error {
    explicit defect_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pcon
