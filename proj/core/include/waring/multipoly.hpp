#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "waring/ring.hpp"

namespace waring {

// Multivariate polynomial with exact integer coefficients, stored as a map
// from exponent vectors to coefficients in canonical term order. Arithmetic
// throws on 64-bit overflow (the verification workloads stay far below it).
class MultiPoly {
  public:
    using Exp = std::vector<unsigned>;

    MultiPoly() = default;
    explicit MultiPoly(unsigned nvars) : nvars_(nvars) {}
    static MultiPoly constant(unsigned nvars, long long c);
    static MultiPoly variable(unsigned nvars, unsigned index);

    unsigned nvars() const { return nvars_; }
    const std::map<Exp, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(const Exp& e) const;
    unsigned total_degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(long long c) const;
    MultiPoly pow(unsigned e) const;

    // Replace variable i with images[i]; all images share one variable space.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    // Coefficients reduced into [0, m).
    MultiPoly coeffs_mod(long long m) const;
    // Coefficients reduced into (-m/2, m/2] (for readable residuals).
    MultiPoly coeffs_mod_symmetric(long long m) const;

    u64 eval(const Ring& R, const std::vector<u64>& point) const;

    std::string to_string(const std::vector<std::string>& names) const;
    static MultiPoly parse(std::string_view text, const std::vector<std::string>& names);

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    void add_term(const Exp& e, long long c);

  private:
    unsigned nvars_ = 0;
    std::map<Exp, long long> terms_;
};

}  // namespace waring
