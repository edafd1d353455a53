#pragma once

#include <stdexcept>
#include <string>

namespace lipsat {

/// Machine-readable failure categories.  Every exception thrown by the
/// library is an `error` carrying one of these codes; the CLI maps them to
/// process exit codes.
enum class errc {
    empty_input,            // no generators supplied
    invalid_generator,      // a generator is <= 0
    non_coprime,            // gcd of all generators is > 1 (detail() = that gcd)
    overflow,               // a size or product exceeds the supported 64-bit range
    trivial_semigroup,      // operation undefined on <1> (e.g. saturation index)
    not_a_member,           // exponent is not in the semigroup
    bound_too_small,        // truncation bound below the saturated conductor
    invalid_characteristic, // characteristic is not 0 or a prime, or wrong arity
    invalid_r_override,     // forced saturation index below the intrinsic one
    invalid_argument,       // a numeric precondition (e.g. d >= 1) was violated
    internal_inconsistency, // two independent computations disagreed
    parse_error,            // malformed textual input (CLI / batch / JSON)
    file_not_found,         // input path does not exist or is unreadable
    unwritable_output,      // output path cannot be opened for writing
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::empty_input:            return "empty_input";
    case errc::invalid_generator:      return "invalid_generator";
    case errc::non_coprime:            return "non_coprime";
    case errc::overflow:               return "overflow";
    case errc::trivial_semigroup:      return "trivial_semigroup";
    case errc::not_a_member:           return "not_a_member";
    case errc::bound_too_small:        return "bound_too_small";
    case errc::invalid_characteristic: return "invalid_characteristic";
    case errc::invalid_r_override:     return "invalid_r_override";
    case errc::invalid_argument:       return "invalid_argument";
    case errc::internal_inconsistency: return "internal_inconsistency";
    case errc::parse_error:            return "parse_error";
    case errc::file_not_found:         return "file_not_found";
    case errc::unwritable_output:      return "unwritable_output";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, long long detail = 0)
        : std::runtime_error(what), code_(code), detail_(detail) {}

    errc code() const noexcept { return code_; }

    /// Extra numeric payload; meaning depends on code() (for non_coprime it
    /// is the offending gcd, otherwise usually the offending value).
    long long detail() const noexcept { return detail_; }

private:
    errc code_;
    long long detail_;
};

} // namespace lipsat
