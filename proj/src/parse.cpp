#include "ringrep/parse.hpp"

#include <cctype>
#include <sstream>

namespace ringrep {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t base = 0; // offset added to reported columns

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char take() { return text[pos++]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base + pos); }
};

Int parse_int_literal(Cursor& c) {
    std::size_t start = c.pos;
    if (c.peek() == '-' || c.peek() == '+') c.take();
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a digit");
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) c.take();
    return Int(c.text.substr(start, c.pos - start));
}

RingElement parse_gaussian(Cursor& c) {
    // sign? term (sign term)?  with term = INT | INT 'i' | 'i'
    std::optional<Int> re;
    std::optional<Int> im;
    bool first = true;
    while (true) {
        c.skip_ws();
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.take() == '-') sign = -1;
            c.skip_ws();
        } else if (!first) {
            break;
        }
        Int mag;
        bool has_digits = std::isdigit(static_cast<unsigned char>(c.peek()));
        if (has_digits) {
            std::size_t start = c.pos;
            while (std::isdigit(static_cast<unsigned char>(c.peek()))) c.take();
            mag = Int(c.text.substr(start, c.pos - start));
        } else if (c.peek() == 'i') {
            mag = 1;
        } else {
            c.fail("expected a Gaussian term");
        }
        if (c.peek() == 'i') {
            c.take();
            if (im) c.fail("duplicate imaginary part");
            im = sign * mag;
        } else {
            if (!has_digits) c.fail("expected a Gaussian term");
            if (re) c.fail("duplicate real part");
            re = sign * mag;
        }
        first = false;
        c.skip_ws();
        if (c.peek() != '+' && c.peek() != '-') break;
    }
    return RingElement::gaussian(re.value_or(0), im.value_or(0));
}

RingElement parse_poly(Cursor& c, std::uint32_t p) {
    // sign? term (sign term)* with term = INT ('*' 'x' ('^' INT)?)? | 'x' ('^' INT)?
    std::vector<Int> coeffs;
    auto bump = [&](unsigned deg, const Int& v) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Int(0));
        coeffs[deg] += v;
    };
    bool first = true;
    while (true) {
        c.skip_ws();
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.take() == '-') sign = -1;
            c.skip_ws();
        } else if (!first) {
            break;
        }
        Int coef = 1;
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = parse_int_literal(c);
            saw_coef = true;
            c.skip_ws();
            if (c.peek() == '*') {
                c.take();
                c.skip_ws();
                if (c.peek() != 'x') c.fail("expected x after *");
            }
        }
        unsigned deg = 0;
        if (c.peek() == 'x') {
            c.take();
            deg = 1;
            if (c.peek() == '^') {
                c.take();
                Int d = parse_int_literal(c);
                if (d < 0 || d > 1024) c.fail("bad exponent");
                deg = d.convert_to<unsigned>();
            }
        } else if (!saw_coef) {
            c.fail("expected a polynomial term");
        }
        bump(deg, sign * coef);
        first = false;
        c.skip_ws();
        if (c.peek() != '+' && c.peek() != '-') break;
    }
    if (coeffs.empty()) coeffs.push_back(Int(0));
    return RingElement::poly(p, coeffs);
}

// Splits "num/den" at the single top-level '/', respecting parentheses.
// Returns the two (optionally parenthesized) part strings with their offsets.
struct FractionParts {
    std::string num;
    std::size_t num_off;
    std::string den;
    std::size_t den_off;
    bool has_den;
};

FractionParts split_fraction(const std::string& text, std::size_t base) {
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (ch == '/' && depth == 0) {
            if (slash != std::string::npos) throw ParseError("multiple '/' in fraction", base + i);
            slash = i;
        }
        if (depth < 0) throw ParseError("unbalanced ')'", base + i);
    }
    if (depth != 0) throw ParseError("unbalanced '('", base + text.size());

    auto strip = [&](std::string part, std::size_t off) -> std::pair<std::string, std::size_t> {
        std::size_t b = 0, e = part.size();
        while (b < e && std::isspace(static_cast<unsigned char>(part[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(part[e - 1]))) --e;
        if (e - b >= 2 && part[b] == '(' && part[e - 1] == ')') {
            // strip one balanced outer pair
            int d = 0;
            bool outer = true;
            for (std::size_t i = b; i < e; ++i) {
                if (part[i] == '(') ++d;
                if (part[i] == ')') {
                    --d;
                    if (d == 0 && i + 1 != e) { outer = false; break; }
                }
            }
            if (outer) { ++b; --e; }
        }
        return {part.substr(b, e - b), off + b};
    };

    FractionParts out;
    if (slash == std::string::npos) {
        auto [s, off] = strip(text, base);
        out.num = s;
        out.num_off = off;
        out.has_den = false;
        return out;
    }
    auto [ns, noff] = strip(text.substr(0, slash), base);
    auto [ds, doff] = strip(text.substr(slash + 1), base + slash + 1);
    out.num = ns;
    out.num_off = noff;
    out.den = ds;
    out.den_off = doff;
    out.has_den = true;
    return out;
}

RingElement parse_element_at(const Ring& ring, const std::string& text, std::size_t base);

RingElement parse_fraction_field(const Ring& ring, const std::string& text, std::size_t base) {
    FractionParts parts = split_fraction(text, base);
    Ring bring = ring.base();
    RingElement num = parse_element_at(bring, parts.num, parts.num_off);
    if (!parts.has_den) return embed_in_fraction_field(num);
    RingElement den = parse_element_at(bring, parts.den, parts.den_off);
    if (den.is_zero()) throw ParseError("zero denominator", parts.den_off);
    return fraction_make(num, den);
}

RingElement parse_element_at(const Ring& ring, const std::string& text, std::size_t base) {
    if (ring.is_fraction_field()) return parse_fraction_field(ring, text, base);
    Cursor c{text, 0, base};
    c.skip_ws();
    if (c.done()) c.fail("empty element literal");
    RingElement out = [&]() {
        switch (ring.kind()) {
        case Ring::Kind::Integers: return RingElement::integer(parse_int_literal(c));
        case Ring::Kind::GaussianIntegers: return parse_gaussian(c);
        case Ring::Kind::PrimeField: return RingElement::residue(ring.modulus(), parse_int_literal(c));
        case Ring::Kind::PolyOverPrimeField: return parse_poly(c, ring.modulus());
        default: c.fail("unsupported ring");
        }
    }();
    c.skip_ws();
    if (!c.done()) c.fail("trailing characters in element literal");
    return out;
}

bool needs_parens(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-') return true;
    }
    return false;
}

} // namespace

Ring parse_ring_selector(const std::string& selector) {
    auto parse_p = [&](const std::string& s, std::size_t off) -> std::uint32_t {
        if (off >= s.size()) throw ParseError("missing modulus in ring selector", off);
        std::uint64_t p = 0;
        for (std::size_t i = off; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("bad modulus in ring selector", i);
            p = p * 10 + (s[i] - '0');
            if (p >= (1u << 31)) throw ParseError("modulus too large", i);
        }
        return static_cast<std::uint32_t>(p);
    };
    if (selector == "z") return Ring::integers();
    if (selector == "zi") return Ring::gaussian_integers();
    if (selector.rfind("fp:", 0) == 0) return Ring::prime_field(parse_p(selector, 3));
    if (selector.rfind("fpx:", 0) == 0) return Ring::poly_over_prime_field(parse_p(selector, 4));
    if (selector.rfind("q:", 0) == 0)
        return Ring::fraction_field(parse_ring_selector(selector.substr(2)));
    // shorthand "f<p>x" for fpx:<p>, as in f2x
    if (selector.size() >= 3 && selector.front() == 'f' && selector.back() == 'x') {
        std::string digits = selector.substr(1, selector.size() - 2);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return Ring::poly_over_prime_field(parse_p("fpx:" + digits, 4));
    }
    throw ParseError("unknown ring selector '" + selector + "' (want z, zi, fp:<p>, fpx:<p>)", 0);
}

RingElement parse_element(const Ring& ring, const std::string& text) {
    return parse_element_at(ring, text, 0);
}

std::string format_element(const RingElement& e) {
    switch (e.ring().kind()) {
    case Ring::Kind::Integers: return e.as_integer().str();
    case Ring::Kind::GaussianIntegers: {
        const auto& g = e.as_gaussian();
        if (g.im == 0) return g.re.str();
        std::string im_part;
        if (g.im == 1) im_part = "i";
        else if (g.im == -1) im_part = "-i";
        else im_part = g.im.str() + "i";
        if (g.re == 0) return im_part;
        if (g.im > 0) return g.re.str() + "+" + im_part;
        return g.re.str() + im_part; // im_part already carries the minus sign
    }
    case Ring::Kind::PrimeField: return std::to_string(e.as_residue());
    case Ring::Kind::PolyOverPrimeField: {
        const auto& c = e.as_poly().coeffs;
        if (c.empty()) return "0";
        std::ostringstream out;
        bool firstterm = true;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            if (!firstterm) out << "+";
            firstterm = false;
            if (i == 0) {
                out << c[i];
            } else {
                if (c[i] != 1) out << c[i] << "*";
                out << "x";
                if (i > 1) out << "^" << i;
            }
        }
        return out.str();
    }
    case Ring::Kind::FractionField: {
        const Fraction& f = e.as_fraction();
        std::string n = format_element(f.num());
        std::string d = format_element(f.den());
        if (needs_parens(n)) n = "(" + n + ")";
        if (needs_parens(d)) d = "(" + d + ")";
        return n + "/" + d;
    }
    }
    throw Error("format_element: bad ring");
}

Word parse_word(const Ring& ring, const std::string& text) {
    Word out(ring);
    std::size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) return out; // identity word
    bool expect_letter = true;
    while (pos < text.size()) {
        if (expect_letter) {
            char kind = text[pos];
            if (kind != 'u' && kind != 's')
                throw ParseError("expected generator 'u[...]' or 's[...]'", pos);
            std::size_t kind_pos = pos;
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
            std::size_t open = pos;
            ++pos;
            int depth = 1;
            std::size_t start = pos;
            while (pos < text.size() && depth > 0) {
                if (text[pos] == '[') ++depth;
                else if (text[pos] == ']') --depth;
                if (depth > 0) ++pos;
            }
            if (depth != 0) throw ParseError("unterminated '['", open);
            std::string inner = text.substr(start, pos - start);
            ++pos; // consume ']'
            RingElement elem = parse_element_at(ring, inner, start);
            if (kind == 's') {
                if (elem.is_zero())
                    throw ParseError("s[0] is not a generator (r must be nonzero)", kind_pos);
                out.append(Generator::s(std::move(elem)));
            } else {
                out.append(Generator::u(std::move(elem)));
            }
            expect_letter = false;
        } else {
            if (text[pos] != '*') throw ParseError("expected '*' between generators", pos);
            ++pos;
            expect_letter = true;
        }
        skip_ws();
    }
    if (expect_letter) throw ParseError("dangling '*' at end of word", text.size());
    return out;
}

std::string format_word(const Word& w) {
    if (w.empty()) return "";
    std::ostringstream out;
    bool first = true;
    for (const Generator& g : w.letters()) {
        if (!first) out << "*";
        first = false;
        out << (g.is_u() ? "u[" : "s[") << format_element(g.elem()) << "]";
    }
    return out.str();
}

std::string format_normal_form(const NormalForm& nf) {
    return "(" + format_element(nf.mult()) + ", " + format_element(nf.trans()) + ")";
}

Fraction parse_integer_fraction(const std::string& text) {
    RingElement e = parse_element_at(Ring::fraction_field(Ring::integers()), text, 0);
    return e.as_fraction();
}

} // namespace ringrep
