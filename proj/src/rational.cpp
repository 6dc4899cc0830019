#include "lval/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lval {

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    // GMP would accept leading '+' or whitespace; the text format does not.
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer_token(num)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!valid_integer_token(den) || den.front() == '-') {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        const mpz_class d{std::string(den)};
        if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    }
    Rational q{std::string(text)};
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

bool is_canonical(const Rational& q) {
    if (q.get_den() <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return g == 1;
}

}  // namespace lval
