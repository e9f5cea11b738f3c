#include "waring/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace waring {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

}  // namespace

MultiPoly MultiPoly::constant(unsigned nvars, long long c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Exp(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned index) {
    if (index >= nvars) throw std::out_of_range("variable index");
    MultiPoly p(nvars);
    Exp e(nvars, 0);
    e[index] = 1;
    p.terms_[e] = 1;
    return p;
}

long long MultiPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

void MultiPoly::add_term(const Exp& e, long long c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, checked_mul(c, -1));
    return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::scaled(long long s) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (auto& [e, c] : terms_) r.terms_[e] = checked_mul(c, s);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r(nvars_);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            Exp e(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, checked_mul(ca, cb));
        }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(nvars_, 1);
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
    unsigned target_vars = images.empty() ? 0 : images[0].nvars();
    for (auto& im : images)
        if (im.nvars() != target_vars) throw std::invalid_argument("inconsistent substitution space");
    MultiPoly r(target_vars);
    for (auto& [e, c] : terms_) {
        MultiPoly term = constant(target_vars, c);
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i]) term = term * images[i].pow(e[i]);
        r = r + term;
    }
    return r;
}

MultiPoly MultiPoly::coeffs_mod(long long m) const {
    if (m <= 0) throw std::invalid_argument("modulus must be positive");
    MultiPoly r(nvars_);
    for (auto& [e, c] : terms_) {
        long long v = c % m;
        if (v < 0) v += m;
        if (v != 0) r.terms_[e] = v;
    }
    return r;
}

MultiPoly MultiPoly::coeffs_mod_symmetric(long long m) const {
    MultiPoly r = coeffs_mod(m);
    MultiPoly out(nvars_);
    for (auto& [e, c] : r.terms_) {
        long long v = c;
        if (v > m / 2) v -= m;
        if (v != 0) out.terms_[e] = v;
    }
    return out;
}

u64 MultiPoly::eval(const Ring& R, const std::vector<u64>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation arity mismatch");
    u64 acc = R.zero();
    for (auto& [e, c] : terms_) {
        u64 mono = R.one();
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i]) mono = R.mul(mono, R.pow(point[i], e[i]));
        acc = R.add(acc, R.scale(c, mono));
    }
    return acc;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending total degree, then lexicographic
    std::vector<std::pair<Exp, long long>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](auto& a, auto& b) {
        unsigned da = std::accumulate(a.first.begin(), a.first.end(), 0u);
        unsigned db = std::accumulate(b.first.begin(), b.first.end(), 0u);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (auto& [e, c] : items) {
        long long v = c;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        long long a = v < 0 ? -v : v;
        bool any_var = false;
        for (unsigned i = 0; i < nvars_; ++i) any_var = any_var || e[i];
        if (a != 1 || !any_var) os << a;
        bool star = a != 1;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (star) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& names) {
    unsigned nvars = (unsigned)names.size();
    MultiPoly p(nvars);
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    bool first = true;
    while (true) {
        skip();
        long long sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first && i >= text.size()) {
            break;
        } else if (!first) {
            break;
        }
        first = false;
        skip();
        long long coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            long long v = 0;
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
                v = checked_add(checked_mul(v, 10), text[i++] - '0');
            coeff = v;
            have_coeff = true;
        }
        Exp e(nvars, 0);
        bool any_var = false;
        while (true) {
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            }
            if (i >= text.size() || !std::isalpha((unsigned char)text[i])) break;
            std::string v;
            while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
                v += text[i++];
            unsigned idx = nvars;
            for (unsigned j = 0; j < nvars; ++j)
                if (names[j] == v) idx = j;
            if (idx == nvars) throw std::invalid_argument("unknown variable '" + v + "'");
            unsigned ex = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                ex = 0;
                if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
                    throw std::invalid_argument("missing exponent");
                while (i < text.size() && std::isdigit((unsigned char)text[i]))
                    ex = ex * 10 + (unsigned)(text[i++] - '0');
            }
            e[idx] += ex;
            any_var = true;
        }
        if (!have_coeff && !any_var) throw std::invalid_argument("expected a polynomial term");
        p.add_term(e, sign * coeff);
        skip();
        if (i >= text.size()) break;
        if (text[i] != '+' && text[i] != '-') throw std::invalid_argument("unexpected character in polynomial");
    }
    return p;
}

}  // namespace waring
