#pragma once

#include <stdexcept>
#include <string>

namespace seqlab {

// Error categories map onto the CLI exit codes.
enum class ErrorKind {
    Validation,    // bad input data, spec violations          (exit 2)
    Verification,  // a certificate or cross-check failed      (exit 1)
    Budget,        // configured brute-force budget exceeded   (exit 3)
    Capacity,      // requested object exceeds hard caps       (exit 2)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    int exit_code() const {
        switch (kind_) {
            case ErrorKind::Verification: return 1;
            case ErrorKind::Budget: return 3;
            default: return 2;
        }
    }

private:
    ErrorKind kind_;
};

}  // namespace seqlab
