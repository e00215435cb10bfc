#include "propb/errors.hpp"

namespace propb {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parameter: return "parameter error";
    case ErrorKind::Divisibility: return "divisibility error";
    case ErrorKind::Index: return "index error";
    case ErrorKind::Construction: return "construction error";
    case ErrorKind::Size: return "size error";
    case ErrorKind::Input: return "input error";
    case ErrorKind::Majority: return "majority error";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Budget: return "budget error";
    case ErrorKind::Assertion: return "assertion error";
    }
    return "error";
}

} // namespace propb
