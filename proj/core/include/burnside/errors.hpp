#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burnside {

/// Base class of every exception thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two permutations of different degree were combined.
class degree_mismatch : public error {
public:
    using error::error;
};

/// Group enumeration grew past the configured element cap.
class order_cap_exceeded : public error {
public:
    order_cap_exceeded(long long cap, const std::string& what_arg)
        : error(what_arg), cap_(cap) {}
    long long cap() const { return cap_; }

private:
    long long cap_;
};

/// Text input (cycle notation, group spec grammar) failed to parse.
/// `position` is the byte offset of the offending character.
class parse_error : public error {
public:
    parse_error(std::size_t position, const std::string& what_arg)
        : error(what_arg), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class not_normal : public error {
public:
    using error::error;
};

class not_abelian : public error {
public:
    using error::error;
};

/// The group handed to inversion_units was not built as A x| <inv>.
class wrong_construction : public error {
public:
    using error::error;
};

/// The exhaustive unit search was asked to cover more than 2^cap sign vectors.
class oracle_cap_exceeded : public error {
public:
    using error::error;
};

/// A computed unit failed the marks-table membership test, or a guaranteed
/// structural fact (e.g. -1 in the span) did not hold.  Indicates a bug.
class verification_error : public error {
public:
    using error::error;
};

/// Subgroup-lattice data is inconsistent (bad import, missing class, ...).
class lattice_error : public error {
public:
    using error::error;
};

} // namespace burnside
