#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace fracdim {

// Exact rational value domain for all weights and dimension values.
// Canonicalization (lowest terms, positive denominator) is maintained by
// the GMP backend; no floating point appears anywhere in a solve path.
using Rational = boost::multiprecision::mpq_rational;

// "p/q", or just "p" when the denominator is 1.
std::string to_frac_string(const Rational& r);

// "p/q (≈ d.dddd)"; the decimal part is display-only.
std::string to_display_string(const Rational& r);

// Map from vertices to rationals in [0,1]; the weight is the entry sum.
class WeightFunction {
public:
    explicit WeightFunction(std::vector<Rational> values);

    // All entries equal to value.
    static WeightFunction constant(int n, const Rational& value);

    int size() const { return static_cast<int>(values_.size()); }
    const Rational& operator[](int v) const { return values_.at(v); }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& weight() const { return weight_; }

    // Sum of entries over a vertex subset.
    Rational sum_over(const std::vector<int>& support) const;

private:
    std::vector<Rational> values_;
    Rational weight_;
};

}  // namespace fracdim
