#include "cml/map_params.hpp"

#include <sstream>

namespace cml {

Profile parse_profile(const std::string& s) {
    if (s == "theorem1") return Profile::Theorem1;
    if (s == "theorem2") return Profile::Theorem2;
    throw InputError("unknown profile '" + s + "' (expected theorem1 or theorem2)");
}

std::string to_string(Profile p) {
    return p == Profile::Theorem1 ? "theorem1" : "theorem2";
}

Rational MapParams::delta_lower(const Rational& eta) {
    return eta * eta * eta / (2 - 4 * eta);
}

Rational MapParams::delta_upper(const Rational& eta) {
    return (eta * eta * eta - 3 * eta * eta + eta) / (4 - 2 * eta);
}

MapParams validate_params(const Rational& eta, const Rational& delta, const Rational& gamma) {
    if (!(eta > 0) || !(eta < Rational(1, 4)))
        throw ParamError(ParamError::Kind::EtaOutOfRange,
                         "eta = " + to_string(eta) + " outside (0, 1/4)");
    const Rational lo = MapParams::delta_lower(eta);
    const Rational hi = MapParams::delta_upper(eta);
    if (!(delta > lo) || !(delta < hi))
        throw ParamError(ParamError::Kind::DeltaOutOfRange,
                         "delta = " + to_string(delta) + " outside (" + to_string(lo) + ", " +
                             to_string(hi) + ") for eta = " + to_string(eta));

    MapParams p;
    p.eta = eta;
    p.delta = delta;
    p.gamma = gamma;
    p.a = 1 - 4 * eta;
    p.b = 1 - 2 * eta - 4 * delta;
    p.c = 1 - 2 * eta - 3 * delta;
    p.d = 1 - 2 * eta - 2 * delta;
    p.v = 1 - eta;
    p.u = p.v * p.v;
    p.d1 = p.d + gamma;
    p.d2 = p.d + 2 * gamma;

    if (!(gamma > 0) || !(gamma < p.gamma_upper()))
        throw ParamError(ParamError::Kind::GammaTooLarge,
                         "gamma = " + to_string(gamma) + " outside (0, " +
                             to_string(p.gamma_upper()) + ")");

    // The ladder ordering follows from the region above; rechecked anyway.
    const Rational* ladder[] = {&p.a, &p.b, &p.c, &p.d, &p.d1, &p.d2, &p.u, &p.v};
    if (!(p.a > 0))
        throw ParamError(ParamError::Kind::EtaOutOfRange, "breakpoint a not positive");
    for (size_t i = 0; i + 1 < sizeof(ladder) / sizeof(ladder[0]); ++i)
        if (!(*ladder[i] < *ladder[i + 1]))
            throw ParamError(ParamError::Kind::DeltaOutOfRange, "breakpoint ladder not ordered");
    if (!(p.v < 1))
        throw ParamError(ParamError::Kind::EtaOutOfRange, "v not below 1");
    return p;
}

std::string MapParams::describe() const {
    std::ostringstream os;
    os << "eta=" << to_string(eta) << " delta=" << to_string(delta)
       << " gamma=" << to_string(gamma) << " k=" << k << " a=" << to_string(a)
       << " b=" << to_string(b) << " c=" << to_string(c) << " d=" << to_string(d)
       << " d'=" << to_string(d1) << " d''=" << to_string(d2) << " u=" << to_string(u)
       << " v=" << to_string(v);
    return os.str();
}

}  // namespace cml
