#include "nkz/rational.hpp"

#include <cctype>
#include <ostream>

namespace nkz {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty rational literal");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw InvalidInput("bad rational literal: '" + text + "'");
    bool seen_slash = false;
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] == '/' && !seen_slash && k + 1 < text.size() && k > i) {
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw InvalidInput("bad rational literal: '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw InvalidInput("bad rational literal: '" + text + "'");
    if (sgn(q.get_den()) == 0) throw InvalidInput("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace nkz
