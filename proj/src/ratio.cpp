#include "itree/ratio.hpp"

#include <cctype>

namespace itree {

namespace {

long long parse_ll(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("ratio: empty numeric field");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("ratio: non-digit in numeric field");
    if (s.size() > 18) throw std::invalid_argument("ratio: numeric field too long");
    return std::stoll(s);
}

}  // namespace

Ratio Ratio::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long num = parse_ll(text.substr(0, slash));
        long long den = parse_ll(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("ratio: zero denominator");
        return Ratio(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Ratio(parse_ll(text), 1);
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("ratio: bare dot");
    if (frac.size() > 15) throw std::invalid_argument("ratio: too many decimal digits");
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long num = (whole.empty() ? 0 : parse_ll(whole)) * den + (frac.empty() ? 0 : parse_ll(frac));
    return Ratio(num, den);
}

}  // namespace itree
