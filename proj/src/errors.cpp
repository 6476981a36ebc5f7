#include "adsum/errors.hpp"

namespace adsum {

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::config:
        case ErrorKind::range:
        case ErrorKind::domain:
            return 2;
        case ErrorKind::resource:
            return 3;
        case ErrorKind::precision:
        case ErrorKind::arithmetic:
        case ErrorKind::singularity:
            return 4;
        case ErrorKind::consistency:
            return 5;
    }
    return 1;
}

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::config: return "config";
        case ErrorKind::range: return "range";
        case ErrorKind::domain: return "domain";
        case ErrorKind::arithmetic: return "arithmetic";
        case ErrorKind::resource: return "resource";
        case ErrorKind::precision: return "precision";
        case ErrorKind::consistency: return "consistency";
        case ErrorKind::singularity: return "singularity";
    }
    return "unknown";
}

}  // namespace adsum
