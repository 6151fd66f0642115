#pragma once

#include <stdexcept>
#include <string>

namespace qhsd {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input / file problems (CLI exit code 2).
struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error("schema error: " + what) {}
};
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error("invalid input: " + what) {}
};
struct UnknownClass : Error {
    explicit UnknownClass(const std::string& what) : Error("unknown class: " + what) {}
};

// Mathematical failures surfaced by operations (CLI exit code 1).
struct AxiomViolation : Error {
    explicit AxiomViolation(const std::string& what) : Error("axiom violation: " + what) {}
};
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error("not invertible: " + what) {}
};
struct NotInvertibleLeadingTerm : NotInvertible {
    explicit NotInvertibleLeadingTerm(const std::string& what) : NotInvertible(what) {}
};
struct TruncationTooSmall : Error {
    explicit TruncationTooSmall(const std::string& what) : Error("truncation too small: " + what) {}
};
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error("degree mismatch: " + what) {}
};
struct ParityViolation : Error {
    explicit ParityViolation(const std::string& what) : Error("parity violation: " + what) {}
};
struct UnboundedCone : Error {
    explicit UnboundedCone(const std::string& what) : Error("unbounded cone: " + what) {}
};
struct SizeBoundExceeded : Error {
    explicit SizeBoundExceeded(const std::string& what) : Error("size bound exceeded: " + what) {}
};
struct RankInconsistency : Error {
    explicit RankInconsistency(const std::string& what) : Error("rank inconsistency: " + what) {}
};
struct InconsistentTable : Error {
    explicit InconsistentTable(const std::string& what) : Error("inconsistent table: " + what) {}
};
struct DegenerateCritical : Error {
    explicit DegenerateCritical(const std::string& what) : Error("degenerate critical point: " + what) {}
};
struct IllConditioned : Error {
    explicit IllConditioned(const std::string& what) : Error("ill conditioned: " + what) {}
};

}  // namespace qhsd
