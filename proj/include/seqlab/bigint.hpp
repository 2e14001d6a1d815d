#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace seqlab {

using BigInt = mpz_class;

inline double to_double(const BigInt& x) { return x.get_d(); }

inline std::string to_string(const BigInt& x) { return x.get_str(); }

// long == long long on this ABI
inline long long to_ll(const BigInt& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("BigInt does not fit in 64 bits");
    return x.get_si();
}

inline bool fits_ll(const BigInt& x) { return x.fits_slong_p(); }

}  // namespace seqlab
