#include "cml/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "cml/error.hpp"

namespace cml {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view in) {
    std::string s(in);
    // strip whitespace
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw InputError("empty rational literal");

    bool neg = false;
    std::string_view v(t);
    if (v.front() == '+' || v.front() == '-') {
        neg = v.front() == '-';
        v.remove_prefix(1);
    }

    auto fail = [&]() -> Rational {
        throw InputError("cannot parse rational literal '" + s + "'");
    };

    // a/b form
    if (auto slash = v.find('/'); slash != std::string_view::npos) {
        std::string_view num = v.substr(0, slash);
        std::string_view den = v.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        Rational q(mpz_class(std::string(num)), mpz_class(std::string(den)));
        if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }

    // decimal / scientific: mantissa [.frac] [e|E exp]
    long exp10 = 0;
    if (auto e = v.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = v.substr(e + 1);
        v = v.substr(0, e);
        std::string estr(es);
        if (estr.empty()) return fail();
        char* end = nullptr;
        exp10 = std::strtol(estr.c_str(), &end, 10);
        if (end == nullptr || *end != '\0') return fail();
    }

    std::string digits;
    long frac_len = 0;
    if (auto dot = v.find('.'); dot != std::string_view::npos) {
        std::string_view ip = v.substr(0, dot);
        std::string_view fp = v.substr(dot + 1);
        if (ip.empty() && fp.empty()) return fail();
        if (!ip.empty() && !all_digits(ip)) return fail();
        if (!fp.empty() && !all_digits(fp)) return fail();
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(v)) return fail();
        digits = std::string(v);
    }
    if (digits.empty()) return fail();

    mpz_class mant(digits);
    Rational q(mant);
    long shift = exp10 - frac_len;
    if (shift != 0) {
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift > 0 ? shift : -shift));
        if (shift > 0)
            q *= Rational(pow10);
        else
            q /= Rational(pow10);
    }
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace cml
