#include "cremona/rat.hpp"

#include <stdexcept>

namespace cremona {

Rat make_rat(long numerator, long denominator) {
    if (denominator == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rat q(numerator, denominator);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rat(mpz_class(text));
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

std::string to_string(const Rat& q) {
    return q.get_str();
}

double to_double(const Rat& q) {
    return q.get_d();
}

}
