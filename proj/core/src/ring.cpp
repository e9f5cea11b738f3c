#include "waring/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace waring {

namespace {

u64 checked_mul(u64 a, u64 b, const char* what) {
    unsigned __int128 p = (unsigned __int128)a * b;
    if (p > (unsigned __int128)UINT64_MAX)
        throw std::overflow_error(std::string("cardinality overflow in ") + what);
    return (u64)p;
}

u64 checked_pow(u64 b, unsigned e, const char* what) {
    u64 r = 1;
    while (e--) r = checked_mul(r, b, what);
    return r;
}

i64 mod_reduce(i64 c, u64 m) {
    i64 mm = (i64)m;
    i64 r = c % mm;
    if (r < 0) r += mm;
    return r;
}

}  // namespace

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return (u64)(((unsigned __int128)a * b) % m);
}

RingPtr Ring::integers_mod(u64 m) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::IntegersMod;
    r->m_ = m;
    r->card_ = m;
    r->char_ = m;
    r->one_ = m == 1 ? 0 : 1;
    r->spec_ = "Z/" + std::to_string(m);
    return r;
}

RingPtr Ring::poly_quotient(u64 m, std::string var, std::vector<i64> coeffs) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    if (coeffs.size() < 2) throw std::invalid_argument("modulus polynomial must have degree >= 1");
    if (coeffs.back() != 1) throw std::invalid_argument("modulus polynomial must be monic");
    if (var.empty() || !std::isalpha((unsigned char)var[0]))
        throw std::invalid_argument("bad quotient variable name");
    if (m == 1) return integers_mod(1);  // trivial base collapses the quotient

    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::PolyQuotient;
    r->m_ = m;
    r->var_ = var;
    r->mod_poly_.reserve(coeffs.size());
    for (i64 c : coeffs) r->mod_poly_.push_back((u64)mod_reduce(c, m));
    r->mod_poly_.back() = 1;
    unsigned deg = (unsigned)coeffs.size() - 1;
    r->card_ = checked_pow(m, deg, "poly quotient");
    r->char_ = m;
    r->one_ = 1;

    std::ostringstream os;
    os << "Z/" << m << "[" << var << "]/(";
    bool first = true;
    for (int i = (int)deg; i >= 0; --i) {
        u64 c = r->mod_poly_[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    os << ")";
    r->spec_ = os.str();
    return r;
}

RingPtr Ring::product(std::vector<RingPtr> factors) {
    if (factors.size() < 2) throw std::invalid_argument("product needs at least two factors");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Product;
    r->card_ = 1;
    r->char_ = 1;
    for (auto& f : factors) {
        r->card_ = checked_mul(r->card_, f->cardinality(), "product ring");
        r->char_ = std::lcm(r->char_, f->characteristic());
    }
    r->factors_ = std::move(factors);
    std::vector<u64> ones;
    for (auto& f : r->factors_) ones.push_back(f->one());
    r->one_ = r->encode_product(ones);
    std::ostringstream os;
    for (size_t i = 0; i < r->factors_.size(); ++i) {
        if (i) os << "x";
        os << "(" << r->factors_[i]->spec() << ")";
    }
    r->spec_ = os.str();
    return r;
}

// --- element coding --------------------------------------------------------

std::vector<u64> Ring::decode_poly(u64 code) const {
    std::vector<u64> d(degree());
    for (auto& x : d) {
        x = code % m_;
        code /= m_;
    }
    return d;
}

u64 Ring::encode_poly(const std::vector<u64>& digits) const {
    u64 code = 0;
    for (size_t i = digits.size(); i-- > 0;) code = code * m_ + digits[i] % m_;
    return code;
}

std::vector<u64> Ring::decode_product(u64 code) const {
    std::vector<u64> comps(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        u64 c = factors_[i]->cardinality();
        comps[i] = code % c;
        code /= c;
    }
    return comps;
}

u64 Ring::encode_product(const std::vector<u64>& comps) const {
    u64 code = 0;
    for (size_t i = comps.size(); i-- > 0;) code = code * factors_[i]->cardinality() + comps[i];
    return code;
}

// --- arithmetic -------------------------------------------------------------

u64 Ring::add(u64 a, u64 b) const {
    switch (kind_) {
        case Kind::IntegersMod: {
            u64 s = a + b;  // m_ <= 2^63 in practice; guard by subtraction form
            if (s < a || s >= m_) s -= m_;
            return s;
        }
        case Kind::PolyQuotient: {
            auto da = decode_poly(a), db = decode_poly(b);
            for (size_t i = 0; i < da.size(); ++i) {
                u64 s = da[i] + db[i];
                if (s >= m_) s -= m_;
                da[i] = s;
            }
            return encode_poly(da);
        }
        case Kind::Product: {
            auto ca = decode_product(a), cb = decode_product(b);
            for (size_t i = 0; i < ca.size(); ++i) ca[i] = factors_[i]->add(ca[i], cb[i]);
            return encode_product(ca);
        }
    }
    return 0;
}

u64 Ring::neg(u64 a) const {
    switch (kind_) {
        case Kind::IntegersMod:
            return a == 0 ? 0 : m_ - a;
        case Kind::PolyQuotient: {
            auto d = decode_poly(a);
            for (auto& x : d) x = x == 0 ? 0 : m_ - x;
            return encode_poly(d);
        }
        case Kind::Product: {
            auto c = decode_product(a);
            for (size_t i = 0; i < c.size(); ++i) c[i] = factors_[i]->neg(c[i]);
            return encode_product(c);
        }
    }
    return 0;
}

u64 Ring::mul(u64 a, u64 b) const {
    switch (kind_) {
        case Kind::IntegersMod:
            return m_ == 1 ? 0 : mulmod_u64(a, b, m_);
        case Kind::PolyQuotient: {
            auto da = decode_poly(a), db = decode_poly(b);
            unsigned deg = degree();
            std::vector<u64> conv(2 * deg - 1, 0);
            for (unsigned i = 0; i < deg; ++i) {
                if (da[i] == 0) continue;
                for (unsigned j = 0; j < deg; ++j)
                    conv[i + j] = (conv[i + j] + mulmod_u64(da[i], db[j], m_)) % m_;
            }
            // fold down by the monic modulus: x^deg = -(mod_poly_[0..deg-1])
            for (size_t i = conv.size(); i-- > deg;) {
                u64 c = conv[i];
                if (c == 0) continue;
                conv[i] = 0;
                for (unsigned j = 0; j < deg; ++j) {
                    u64 t = mulmod_u64(c, mod_poly_[j], m_);
                    u64 cur = conv[i - deg + j];
                    conv[i - deg + j] = (cur + m_ - t) % m_;
                }
            }
            conv.resize(deg);
            return encode_poly(conv);
        }
        case Kind::Product: {
            auto ca = decode_product(a), cb = decode_product(b);
            for (size_t i = 0; i < ca.size(); ++i) ca[i] = factors_[i]->mul(ca[i], cb[i]);
            return encode_product(ca);
        }
    }
    return 0;
}

u64 Ring::int_image(i64 c) const {
    switch (kind_) {
        case Kind::IntegersMod:
            return (u64)mod_reduce(c, m_);
        case Kind::PolyQuotient: {
            std::vector<u64> d(degree(), 0);
            d[0] = (u64)mod_reduce(c, m_);
            return encode_poly(d);
        }
        case Kind::Product: {
            std::vector<u64> comps;
            for (auto& f : factors_) comps.push_back(f->int_image(c));
            return encode_product(comps);
        }
    }
    return 0;
}

u64 Ring::scale(i64 c, u64 x) const { return mul(int_image(c), x); }

u64 Ring::pow(u64 x, u64 e) const {
    u64 r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

// --- printing ----------------------------------------------------------------

std::string Ring::to_string(u64 code) const {
    switch (kind_) {
        case Kind::IntegersMod:
            return std::to_string(code);
        case Kind::PolyQuotient: {
            auto d = decode_poly(code);
            std::ostringstream os;
            bool first = true;
            for (size_t i = d.size(); i-- > 0;) {
                if (d[i] == 0) continue;
                if (!first) os << "+";
                first = false;
                if (i == 0 || d[i] != 1) os << d[i];
                if (i > 0) {
                    if (d[i] != 1) os << "*";
                    os << var_;
                    if (i > 1) os << "^" << i;
                }
            }
            if (first) os << "0";
            return os.str();
        }
        case Kind::Product: {
            auto c = decode_product(code);
            std::ostringstream os;
            os << "(";
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) os << ",";
                os << factors_[i]->to_string(c[i]);
            }
            os << ")";
            return os.str();
        }
    }
    return "";
}

std::vector<u64> Ring::elements() const {
    static constexpr u64 kEnumLimit = 1u << 22;
    if (card_ > kEnumLimit)
        throw std::range_error("ring too large to enumerate: " + spec_);
    std::vector<u64> out;
    out.reserve(card_);
    out.push_back(0);
    if (card_ > 1) out.push_back(one_);
    for (u64 c = 1; c < card_; ++c)
        if (c != one_) out.push_back(c);
    return out;
}

// --- spec parsing -------------------------------------------------------------

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + msg);
    }
    u64 number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected a number");
        u64 v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            u64 digit = (u64)(s[i] - '0');
            if (v > (UINT64_MAX - digit) / 10) fail("number too large");
            v = v * 10 + digit;
            ++i;
        }
        return v;
    }
    std::string ident() {
        skip_ws();
        if (i >= s.size() || !std::isalpha((unsigned char)s[i])) fail("expected an identifier");
        std::string v;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) v += s[i++];
        return v;
    }
};

// monic integer polynomial in `var`, e.g. "x^2+x+1", "e^2", "x^3-2*x-1"
std::vector<i64> parse_int_poly_in_var(Cursor& cur, const std::string& var) {
    std::vector<i64> coeffs;  // low first
    auto bump = [&](size_t deg, i64 c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] += c;
    };
    bool first = true;
    while (true) {
        i64 sign = 1;
        cur.skip_ws();
        if (cur.eat('+')) {
        } else if (cur.eat('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        first = false;
        i64 coeff = 1;
        bool have_coeff = false;
        if (std::isdigit((unsigned char)cur.peek())) {
            coeff = (i64)cur.number();
            have_coeff = true;
            cur.eat('*');
        }
        size_t deg = 0;
        if (std::isalpha((unsigned char)cur.peek())) {
            std::string v = cur.ident();
            if (v != var) cur.fail("unknown variable '" + v + "' (expected '" + var + "')");
            deg = 1;
            if (cur.eat('^')) deg = (size_t)cur.number();
        } else if (!have_coeff) {
            cur.fail("expected a term");
        }
        bump(deg, sign * coeff);
        char c = cur.peek();
        if (c != '+' && c != '-') break;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

RingPtr parse_spec(Cursor& cur);

RingPtr parse_atom(Cursor& cur) {
    if (cur.peek() == '(') {
        cur.eat('(');
        RingPtr r = parse_spec(cur);
        if (!cur.eat(')')) cur.fail("expected ')'");
        return r;
    }
    std::string z = cur.ident();
    if (z != "Z") cur.fail("ring spec must start with Z/ or (");
    if (!cur.eat('/')) cur.fail("expected '/' after Z");
    u64 m = cur.number();
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    if (cur.peek() != '[') return Ring::integers_mod(m);
    cur.eat('[');
    std::string var = cur.ident();
    if (!cur.eat(']')) cur.fail("expected ']'");
    if (!cur.eat('/')) cur.fail("expected '/' before the modulus polynomial");
    if (!cur.eat('(')) cur.fail("expected '('");
    auto coeffs = parse_int_poly_in_var(cur, var);
    if (!cur.eat(')')) cur.fail("expected ')' after the modulus polynomial");
    if (coeffs.size() < 2) throw std::invalid_argument("modulus polynomial must have degree >= 1");
    i64 lead = coeffs.back();
    if (lead != 1 && mod_reduce(lead, m) != 1)
        throw std::invalid_argument("modulus polynomial must be monic");
    coeffs.back() = 1;
    return Ring::poly_quotient(m, var, coeffs);
}

RingPtr parse_spec(Cursor& cur) {
    RingPtr first = parse_atom(cur);
    std::vector<RingPtr> factors{first};
    while (true) {
        cur.skip_ws();
        if (cur.peek() == 'x' && cur.i + 1 <= cur.s.size()) {
            size_t save = cur.i;
            ++cur.i;  // consume 'x'
            if (cur.peek() == '(') {
                factors.push_back(parse_atom(cur));
                continue;
            }
            cur.i = save;
        }
        break;
    }
    if (factors.size() == 1) return first;
    return Ring::product(std::move(factors));
}

}  // namespace

RingPtr Ring::parse(std::string_view spec) {
    Cursor cur{spec};
    RingPtr r = parse_spec(cur);
    cur.skip_ws();
    if (cur.i != spec.size()) cur.fail("trailing input in ring spec");
    return r;
}

// --- element expressions --------------------------------------------------------

namespace {

class ElemParser {
  public:
    ElemParser(const Ring& ring, std::string_view s) : ring_(ring), cur_{s} {}

    u64 parse() {
        u64 v = expr();
        cur_.skip_ws();
        if (cur_.i != cur_.s.size()) cur_.fail("trailing input in element expression");
        return v;
    }

  private:
    u64 expr() {
        u64 v;
        cur_.skip_ws();
        if (cur_.eat('-')) {
            v = ring_.neg(term());
        } else {
            v = term();
        }
        while (true) {
            if (cur_.eat('+'))
                v = ring_.add(v, term());
            else if (cur_.eat('-'))
                v = ring_.sub(v, term());
            else
                break;
        }
        return v;
    }
    u64 term() {
        u64 v = factor();
        while (cur_.eat('*')) v = ring_.mul(v, factor());
        return v;
    }
    u64 factor() {
        u64 v = base();
        if (cur_.eat('^')) v = ring_.pow(v, cur_.number());
        return v;
    }
    u64 base() {
        char c = cur_.peek();
        if (c == '(') {
            cur_.eat('(');
            // A product ring accepts component tuples here.
            if (ring_.kind() == Ring::Kind::Product) {
                size_t save = cur_.i;
                std::vector<u64> comps;
                bool tuple = true;
                for (size_t k = 0; k < ring_.factors().size(); ++k) {
                    size_t depth = 0;
                    size_t start = cur_.i;
                    while (cur_.i < cur_.s.size()) {
                        char ch = cur_.s[cur_.i];
                        if (ch == '(') ++depth;
                        if (ch == ')') {
                            if (depth == 0) break;
                            --depth;
                        }
                        if (ch == ',' && depth == 0) break;
                        ++cur_.i;
                    }
                    std::string_view piece = cur_.s.substr(start, cur_.i - start);
                    if (k + 1 < ring_.factors().size()) {
                        if (!cur_.eat(',')) {
                            tuple = false;
                            break;
                        }
                    }
                    comps.push_back(tuple ? ring_.factors()[k]->parse_element(piece) : 0);
                }
                if (tuple && cur_.eat(')')) return ring_.encode_product(comps);
                cur_.i = save;
            }
            u64 v = expr();
            if (!cur_.eat(')')) cur_.fail("expected ')'");
            return v;
        }
        if (std::isdigit((unsigned char)c)) return ring_.int_image((i64)cur_.number());
        std::string v = cur_.ident();
        if (ring_.kind() == Ring::Kind::PolyQuotient && v == ring_.var()) {
            std::vector<u64> d(ring_.degree(), 0);
            if (d.size() >= 2) {
                d[1] = 1;
            } else {
                // degree-1 modulus: the variable reduces to -c0
                d[0] = (ring_.modulus() - ring_.modulus_poly()[0]) % ring_.modulus();
            }
            return ring_.encode_poly(d);
        }
        cur_.fail("unknown symbol '" + v + "' in this ring");
    }

    const Ring& ring_;
    Cursor cur_;
};

}  // namespace

u64 Ring::parse_element(std::string_view expr) const {
    return ElemParser(*this, expr).parse();
}

// --- quotients -----------------------------------------------------------------

u64 QuotientMap::project(u64 code) const {
    const Ring& s = *source;
    const Ring& t = *target;
    switch (s.kind()) {
        case Ring::Kind::IntegersMod:
            return code % t.modulus();
        case Ring::Kind::PolyQuotient: {
            auto d = s.decode_poly(code);
            if (t.kind() != Ring::Kind::PolyQuotient) return 0;  // collapsed to Z/1
            std::vector<u64> out(t.degree());
            for (size_t i = 0; i < out.size(); ++i) out[i] = d[i] % t.modulus();
            return t.encode_poly(out);
        }
        case Ring::Kind::Product: {
            auto comps = s.decode_product(code);
            std::vector<u64> out(comps.size());
            for (size_t i = 0; i < comps.size(); ++i) {
                QuotientMap sub{s.factors()[i], t.factors()[i]};
                out[i] = sub.project(comps[i]);
            }
            return t.encode_product(out);
        }
    }
    return 0;
}

QuotientMap quotient_by_integer(const RingPtr& ring, u64 m) {
    if (m == 0) throw std::invalid_argument("quotient modulus must be >= 1");
    switch (ring->kind()) {
        case Ring::Kind::IntegersMod:
            return {ring, Ring::integers_mod(std::gcd(ring->modulus(), m))};
        case Ring::Kind::PolyQuotient: {
            u64 g = std::gcd(ring->modulus(), m);
            if (g == 1) return {ring, Ring::integers_mod(1)};
            std::vector<i64> coeffs;
            for (u64 c : ring->modulus_poly()) coeffs.push_back((i64)(c % g));
            coeffs.back() = 1;
            return {ring, Ring::poly_quotient(g, ring->var(), coeffs)};
        }
        case Ring::Kind::Product: {
            std::vector<RingPtr> facs;
            for (auto& f : ring->factors()) facs.push_back(quotient_by_integer(f, m).target);
            return {ring, Ring::product(std::move(facs))};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace waring
