#include "stabdiv/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stabdiv {

Rational parse_rational(const std::string& text) {
    // integer, p/q, or decimal
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        Integer num(digits);
        Integer den = 1;
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        return make_rational(num, den);
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return q;
}

std::string to_string(const GaussianRational& c) {
    if (c.is_real()) return to_string(c.re);
    std::string im = to_string(c.im);
    if (c.re == 0) {
        if (im == "1") return "(i)";
        if (im == "-1") return "(-i)";
        return "(" + im + "i)";
    }
    std::string out = "(" + to_string(c.re);
    if (c.im > 0)
        out += "+" + (im == "1" ? std::string() : im) + "i)";
    else
        out += "-" + (im == "-1" ? std::string() : to_string(-c.im)) + "i)";
    return out;
}

namespace {

class Parser {
  public:
    Parser(const std::string& text, std::size_t dim) : s_(text), dim_(dim) {}

    Polynomial parse_poly_full() {
        Polynomial p = parse_poly();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

    VectorPolynomial parse_vector_full() {
        skip_ws();
        expect('(');
        std::vector<Polynomial> comps;
        comps.push_back(parse_poly());
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            comps.push_back(parse_poly());
            skip_ws();
        }
        expect(')');
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return VectorPolynomial(std::move(comps));
    }

    // A top-level comma inside an outermost parenthesized group marks a
    // vector; "(1+2i)" stays a scalar coefficient.
    bool looks_like_vector() {
        skip_ws();
        if (peek() != '(') return false;
        int depth = 0;
        for (std::size_t i = pos_; i < s_.size(); ++i) {
            char c = s_[i];
            if (c == '(') ++depth;
            else if (c == ')') {
                --depth;
                if (depth == 0) return false;
            } else if (c == ',' && depth == 1)
                return true;
        }
        return false;
    }

  private:
    const std::string& s_;
    std::size_t dim_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool is_digit() const { return std::isdigit(static_cast<unsigned char>(peek())); }

    Integer parse_uint() {
        skip_ws();
        if (!is_digit()) fail("expected digit");
        std::string digits;
        while (is_digit()) digits += s_[pos_++];
        return Integer(digits);
    }

    // unsigned rational: uint [ '/' uint ]
    Rational parse_rat() {
        Integer num = parse_uint();
        if (peek() == '/') {
            ++pos_;
            Integer den = parse_uint();
            if (den == 0) fail("zero denominator");
            return make_rational(num, den);
        }
        return Rational(num);
    }

    // inside parentheses: [sign] rat ['i'] [ sign rat 'i' ]
    GaussianRational parse_complex_body() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (peek() == '-') sign = -1;
            ++pos_;
            skip_ws();
        }
        Rational first;
        bool first_is_imag = false;
        if (peek() == 'i') {
            ++pos_;
            first = sign;  // bare (i)
            first_is_imag = true;
        } else {
            first = parse_rat() * sign;
            skip_ws();
            if (peek() == 'i') {
                ++pos_;
                first_is_imag = true;
            }
        }
        skip_ws();
        if (first_is_imag) return GaussianRational(Rational(0), first);
        if (peek() == '+' || peek() == '-') {
            int s2 = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            Rational im;
            if (peek() == 'i') {
                ++pos_;
                im = s2;
            } else {
                im = parse_rat() * s2;
                skip_ws();
                if (peek() != 'i') fail("expected 'i' after imaginary part");
                ++pos_;
            }
            return GaussianRational(first, im);
        }
        return GaussianRational(first);
    }

    std::size_t parse_variable() {
        skip_ws();
        char c = peek();
        if (c == 'x' || c == 'y') {
            if (dim_ != 2) fail("variables x, y are only valid for d = 2; use z1..zd");
            ++pos_;
            return c == 'x' ? 0 : 1;
        }
        if (c == 'z') {
            ++pos_;
            if (!is_digit()) fail("expected variable index after 'z'");
            Integer idx = parse_uint();
            if (idx < 1 || idx > Integer(static_cast<unsigned long>(dim_)))
                fail("variable index out of range");
            return idx.get_ui() - 1;
        }
        fail("expected variable");
    }

    bool at_variable() {
        skip_ws();
        char c = peek();
        return c == 'x' || c == 'y' || c == 'z';
    }

    Monomial parse_monomial() {
        Monomial m(dim_);
        bool any = false;
        while (true) {
            if (!at_variable()) {
                if (!any) fail("expected monomial");
                break;
            }
            std::size_t v = parse_variable();
            std::uint64_t e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                Integer k = parse_uint();
                if (k > 100000) fail("exponent too large");
                e = k.get_ui();
            }
            m[v] += static_cast<std::uint32_t>(e);
            any = true;
            skip_ws();
            if (peek() == '*') {
                // '*' may join either another variable or nothing else in
                // this term; only consume when a variable follows
                std::size_t save = pos_;
                ++pos_;
                if (!at_variable()) {
                    pos_ = save;
                    break;
                }
            }
        }
        return m;
    }

    // term := coeff ['*' monomial] | coeff monomial | monomial
    void parse_term(Polynomial& acc, int sign) {
        skip_ws();
        GaussianRational coeff{Rational(sign)};
        bool have_coeff = false;
        if (peek() == '(') {
            ++pos_;
            GaussianRational c = parse_complex_body();
            expect(')');
            coeff = sign == 1 ? c : -c;
            have_coeff = true;
        } else if (is_digit()) {
            coeff = GaussianRational(parse_rat() * sign);
            have_coeff = true;
        }
        skip_ws();
        bool starred = false;
        if (have_coeff && peek() == '*') {
            ++pos_;
            starred = true;
            skip_ws();
        }
        if (at_variable()) {
            Monomial m = parse_monomial();
            acc.add_term(m, coeff);
        } else if (starred) {
            fail("expected monomial after '*'");
        } else if (have_coeff) {
            acc.add_term(Monomial(dim_), coeff);
        } else {
            fail("expected term");
        }
    }

    Polynomial parse_poly() {
        Polynomial acc(dim_);
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        parse_term(acc, sign);
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            parse_term(acc, sign);
            skip_ws();
        }
        return acc;
    }
};

std::string format_monomial(const Monomial& m, std::size_t dim) {
    std::string out;
    for (std::size_t i = 0; i < dim; ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += dim == 2 ? (i == 0 ? "x" : "y") : "z" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t dim) {
    return Parser(text, dim).parse_poly_full();
}

VectorPolynomial parse_vector_polynomial(const std::string& text, std::size_t dim) {
    return Parser(text, dim).parse_vector_full();
}

std::variant<Polynomial, VectorPolynomial> parse(const std::string& text, std::size_t dim) {
    Parser probe(text, dim);
    if (probe.looks_like_vector()) return parse_vector_polynomial(text, dim);
    try {
        return parse_polynomial(text, dim);
    } catch (const ParseError&) {
        // "(x)" — a fully parenthesized single component
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '(')
            return parse_vector_polynomial(text, dim);
        throw;
    }
}

std::string format(const Polynomial& p, const WeightedOrder& ord) {
    if (p.is_zero()) return "0";
    std::vector<const Monomial*> monos;
    for (const auto& [m, c] : p.terms()) monos.push_back(&m);
    std::sort(monos.begin(), monos.end(), [&](const Monomial* a, const Monomial* b) {
        return monomial_less(*b, *a, ord);
    });
    std::string out;
    bool first = true;
    for (const Monomial* m : monos) {
        GaussianRational c = p.coefficient(*m);
        std::string ms = format_monomial(*m, p.dim());
        bool negative_real = c.is_real() && c.re < 0;
        if (first) {
            if (negative_real) {
                out += "-";
                c = -c;
            }
        } else {
            out += negative_real ? " - " : " + ";
            if (negative_real) c = -c;
        }
        first = false;
        if (ms.empty()) {
            out += to_string(c);
        } else if (c == GaussianRational(1)) {
            out += ms;
        } else {
            out += to_string(c) + "*" + ms;
        }
    }
    return out;
}

std::string format(const Polynomial& p) {
    std::size_t d = std::max<std::size_t>(p.dim(), 1);
    return format(p, WeightedOrder::graded_lex(d));
}

std::string format(const VectorPolynomial& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.r(); ++i) {
        if (i) out += ", ";
        out += format(v.component(i));
    }
    return out + ")";
}

}  // namespace stabdiv
