#include "madelung/error.hpp"

namespace madelung {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::parameter: return "parameter";
        case ErrorKind::sizing: return "sizing";
        case ErrorKind::domain: return "domain";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::solver: return "solver";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::resolution: return "resolution";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace madelung
