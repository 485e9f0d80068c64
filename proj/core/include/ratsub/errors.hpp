#ifndef RATSUB_ERRORS_HPP
#define RATSUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratsub {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (word literals, expressions, automaton or group files).
class parse_error : public error {
public:
    using error::error;
};

/// Two objects over different alphabets were combined.
class alphabet_mismatch : public error {
public:
    using error::error;
};

/// A construction-time invariant check failed (coset tables, embeddings, ...).
class validation_error : public error {
public:
    using error::error;
};

/// An oracle-call or solver-node budget ran out. Not a verdict.
class budget_exhausted : public error {
public:
    using error::error;
};

/// A composition the toolkit refuses to build because the resulting
/// membership problem is undecidable.
class unsupported_composition : public error {
public:
    using error::error;
};

} // namespace ratsub

#endif
