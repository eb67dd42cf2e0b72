// Error taxonomy shared by the core library and the C API.

#ifndef DLOGFP_ERROR_HPP
#define DLOGFP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dlogfp {

// Values mirror dlogfp_status in the public C header.
enum class Status : int {
    ok = 0,
    invalid_argument = 1,
    domain_error = 2,
    composite_modulus = 3,
    factorization_mismatch = 4,
    not_generator = 5,
    not_in_group = 6,
    not_found = 7,
    internal = 8,
};

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& what)
        : std::runtime_error(what), status_(status) {}

    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void raise(Status status, const std::string& what) {
    throw Error(status, what);
}

} // namespace dlogfp

#endif
