#pragma once

#include <string>

#include "cml/error.hpp"
#include "cml/rational.hpp"

namespace cml {

class ParamError : public InputError {
public:
    enum class Kind { EtaOutOfRange, DeltaOutOfRange, GammaTooLarge };

    ParamError(Kind kind, const std::string& msg) : InputError(msg), kind(kind) {}

    Kind kind;
};

// Which slope requirement the iterate count k is selected for.
//   Theorem1: min |hat'| >= 4
//   Theorem2: min |hat'| >= 12 v/(u-c) and every maximal monotonicity
//             interval of the rescaled iterate shorter than (u-c)/(6v).
enum class Profile { Theorem1, Theorem2 };

Profile parse_profile(const std::string& s);
std::string to_string(Profile p);

// Shape parameters (eta, delta, gamma) of the piecewise linear site map plus
// the derived breakpoints. All values are exact rationals. The iterate count
// k is 0 until chosen (explicitly or via select_iterate_count).
struct MapParams {
    Rational eta, delta, gamma;
    // breakpoint ladder: 0 < a < b < c < d < d1 < d2 < u < v < 1,
    // d1 = d + gamma, d2 = d + 2 gamma, u = v^2, v = 1 - eta
    Rational a, b, c, d, d1, d2, u, v;
    int k = 0;

    // Admissible delta window for a given eta (open interval).
    static Rational delta_lower(const Rational& eta);
    static Rational delta_upper(const Rational& eta);
    // gamma must stay below (u - d)/2.
    Rational gamma_upper() const { return (u - d) / 2; }

    Rational good_lo() const { return d / v; }  // lower edge of the box [d/v, v]

    std::string describe() const;
};

// Validates the parameter region and computes the ladder. Throws ParamError.
MapParams validate_params(const Rational& eta, const Rational& delta, const Rational& gamma);

}  // namespace cml
