#include "waring/order_criteria.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "waring/waring_sets.hpp"

namespace waring {

int IntPoly::degree() const {
    for (size_t i = c.size(); i-- > 0;)
        if (c[i] != 0) return (int)i;
    return -1;
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::derivative() const {
    IntPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * (long long)i);
    d.normalize();
    return d;
}

IntPoly IntPoly::parse(std::string_view text, const std::string& var) {
    IntPoly p;
    auto bump = [&](size_t deg, const BigInt& v) {
        if (p.c.size() <= deg) p.c.resize(deg + 1, 0);
        p.c[deg] += v;
    };
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    bool first = true;
    while (true) {
        skip();
        int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            break;
        }
        first = false;
        skip();
        BigInt coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            std::string num;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) num += text[i++];
            coeff = BigInt(num);
            have_coeff = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            }
        }
        size_t deg = 0;
        if (i < text.size() && std::isalpha((unsigned char)text[i])) {
            std::string v;
            while (i < text.size() && std::isalnum((unsigned char)text[i])) v += text[i++];
            if (v != var) throw std::invalid_argument("unknown variable '" + v + "' in polynomial");
            deg = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                std::string num;
                while (i < text.size() && std::isdigit((unsigned char)text[i])) num += text[i++];
                if (num.empty()) throw std::invalid_argument("missing exponent");
                deg = std::stoul(num);
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("expected a polynomial term");
        }
        bump(deg, sign * coeff);
        skip();
        if (i >= text.size() || (text[i] != '+' && text[i] != '-')) break;
    }
    skip();
    if (i != text.size()) throw std::invalid_argument("trailing input in polynomial");
    p.normalize();
    if (p.c.empty()) p.c.push_back(0);
    return p;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        BigInt v = c[i];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        BigInt a = abs(v);
        if (i == 0 || a != 1) os << a;
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

BigInt resultant(const IntPoly& f0, const IntPoly& g0) {
    IntPoly f = f0, g = g0;
    f.normalize();
    g.normalize();
    int df = f.degree(), dg = g.degree();
    if (df < 0 && dg < 0) throw std::invalid_argument("resultant of two zero polynomials");
    if (df < 0 || dg < 0) return 0;
    if (df == 0 && dg == 0) return 1;
    if (df == 0) {
        BigInt r = 1;
        for (int i = 0; i < dg; ++i) r *= f.c[0];
        return r;
    }
    if (dg == 0) {
        BigInt r = 1;
        for (int i = 0; i < df; ++i) r *= g.c[0];
        return r;
    }

    // Sylvester matrix, size (df+dg), rows of g-coefficients then f-coefficients
    int n = df + dg;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
    for (int row = 0; row < dg; ++row)
        for (int j = 0; j <= df; ++j) a[row][row + j] = f.c[df - j];
    for (int row = 0; row < df; ++row)
        for (int j = 0; j <= dg; ++j) a[dg + row][row + j] = g.c[dg - j];

    // Bareiss fraction-free elimination; divisions are exact.
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

BigInt discriminant(const IntPoly& f) {
    if (!f.monic()) throw std::invalid_argument("discriminant requires a monic polynomial");
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("discriminant requires degree >= 2");
    BigInt r = resultant(f, f.derivative());
    return (d * (d - 1) / 2) % 2 ? -r : r;
}

OrderCriterion order_power_criterion(const IntPoly& f, unsigned p, Budget& budget) {
    if (!f.monic() || f.degree() < 2)
        throw std::invalid_argument("the order criterion needs a monic polynomial of degree >= 2");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("p must be prime");
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");

    OrderCriterion out;
    out.disc = discriminant(f);
    out.disc_stmt = gcd(BigInt(p), abs(out.disc)) == 1;

    // R/pR for the monogenic order is Z/p[x]/(f mod p).
    std::vector<i64> coeffs;
    for (auto& c : f.c) coeffs.push_back((i64)(((c % p) + p) % p));
    coeffs.back() = 1;
    out.residue_ring = Ring::poly_quotient(p, "x", coeffs);

    auto pv = pth_power_mod_p(out.residue_ring, p, budget);
    out.power_stmt = pv.holds;
    out.power_counterexample = pv.counterexample;

    out.radical_stmt = true;
    for (u64 x : out.residue_ring->elements()) {
        budget.charge(1, "radical sweep");
        if (out.residue_ring->pow(x, p) == 0 && x != 0) {
            out.radical_stmt = false;
            out.radical_counterexample = x;
            break;
        }
    }
    return out;
}

}  // namespace waring
