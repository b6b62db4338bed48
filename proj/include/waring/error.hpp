#ifndef WARING_ERROR_HPP
#define WARING_ERROR_HPP

#include <stdexcept>
#include <string>

namespace waring {

// Error taxonomy mirrored by the CLI's machine-readable error.kind field.
enum class ErrorKind {
    parse,
    degree,
    field,
    constraint,
    search_exhausted,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    const char* kind_name() const {
        switch (kind_) {
            case ErrorKind::parse: return "parse";
            case ErrorKind::degree: return "degree";
            case ErrorKind::field: return "field";
            case ErrorKind::constraint: return "constraint";
            case ErrorKind::search_exhausted: return "search-exhausted";
            case ErrorKind::internal: return "internal";
        }
        return "internal";
    }

private:
    ErrorKind kind_;
};

}  // namespace waring

#endif
