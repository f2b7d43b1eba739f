#include "fracdim/rational.hpp"

#include <sstream>

namespace fracdim {

std::string to_frac_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) {
        out << '/' << denominator(r);
    }
    return out.str();
}

std::string to_display_string(const Rational& r) {
    // 4 decimal digits, truncated toward zero; advisory only.
    boost::multiprecision::mpz_int scaled = numerator(r) * 10000 / denominator(r);
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::ostringstream digits;
    digits << scaled;
    std::string s = digits.str();
    while (s.size() < 5) s.insert(s.begin(), '0');
    s.insert(s.size() - 4, ".");
    std::ostringstream out;
    out << to_frac_string(r) << " (≈ " << (negative ? "-" : "") << s << ")";
    return out.str();
}

WeightFunction::WeightFunction(std::vector<Rational> values)
    : values_(std::move(values)), weight_(0) {
    for (const Rational& x : values_) {
        if (x < 0 || x > 1) {
            throw std::invalid_argument("weight function entry outside [0,1]: " +
                                        to_frac_string(x));
        }
        weight_ += x;
    }
}

WeightFunction WeightFunction::constant(int n, const Rational& value) {
    return WeightFunction(std::vector<Rational>(n, value));
}

Rational WeightFunction::sum_over(const std::vector<int>& support) const {
    Rational total = 0;
    for (int v : support) total += values_.at(v);
    return total;
}

}  // namespace fracdim
