#pragma once

#include <stdexcept>
#include <string>

namespace adsum {

enum class ErrorKind { config, range, domain, arithmetic, resource, precision, consistency, singularity };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

// Process exit status used by the command line front end.
int exit_code(ErrorKind kind);

const char* kind_name(ErrorKind kind);

}  // namespace adsum
