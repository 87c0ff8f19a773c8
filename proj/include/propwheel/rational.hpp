#ifndef PROPWHEEL_RATIONAL_HPP
#define PROPWHEEL_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace propwheel {

// Exact rational scalar. mpq_class keeps values canonical (gcd 1, positive
// denominator) after canonicalize(), which every constructor here guarantees.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Renders "p/q" with q > 0 and gcd(p,q) = 1; integers without the "/1".
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p" or "p/q" with optional leading '-'. Throws on malformed input
// or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(s);
            return Rat(num);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

}  // namespace propwheel

#endif
