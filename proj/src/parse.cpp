#include "sympow/parse.hpp"

#include <algorithm>
#include <cctype>

namespace sympow {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done()
    {
        skip_ws();
        return i >= s.size();
    }
    char peek()
    {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c)
    {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what)
    {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' in " + what, i);
    }
    std::string take_word()
    {
        skip_ws();
        std::size_t j = i;
        if (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
        std::string w = s.substr(i, j - i);
        i = j;
        return w;
    }
    std::string take_digits()
    {
        skip_ws();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        std::string w = s.substr(i, j - i);
        i = j;
        return w;
    }
};

class PolyParser {
public:
    PolyParser(const Ring& ring, const std::string& text) : ring_(ring), cur_{text} {}

    Poly run()
    {
        Poly p = parse_expr();
        if (!cur_.done())
            throw ParseError("trailing input after polynomial", cur_.i);
        return p;
    }

private:
    const Ring& ring_;
    Cursor cur_;

    Poly one() const { return Poly::constant(ring_, Coef::one(ring_.field())); }

    // A term with any run of prefix signs folded in ("- -y" is y).
    Poly parse_signed_term()
    {
        bool neg = false;
        for (;;) {
            if (cur_.eat('-'))
                neg = !neg;
            else if (!cur_.eat('+'))
                break;
        }
        Poly p = parse_term();
        return neg ? -p : p;
    }

    Poly parse_expr()
    {
        Poly acc = parse_signed_term();
        for (;;) {
            if (cur_.eat('+'))
                acc = acc + parse_signed_term();
            else if (cur_.eat('-'))
                acc = acc - parse_signed_term();
            else
                return acc;
        }
    }

    Poly parse_term()
    {
        Poly acc = parse_factor();
        for (;;) {
            char c = cur_.peek();
            if (c == '*') {
                ++cur_.i;
                acc = acc * parse_factor();
            } else if (c == '/') {
                std::size_t at = cur_.i;
                ++cur_.i;
                Poly d = parse_factor();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("division only by nonzero constants", at);
                acc = acc.scaled(d.terms()[0].c.inv());
            } else if (std::isdigit(static_cast<unsigned char>(c))
                       || std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
                acc = acc * parse_factor(); // juxtaposition is multiplication
            } else {
                return acc;
            }
        }
    }

    unsigned parse_exponent()
    {
        std::size_t at = cur_.i;
        std::string d = cur_.take_digits();
        if (d.empty())
            throw ParseError("malformed exponent: expected a non-negative integer after '^'", at);
        if (d.size() > 5 || std::stoul(d) > 0xffff)
            throw ParseError("exponent out of range (max 65535)", at);
        return static_cast<unsigned>(std::stoul(d));
    }

    Poly parse_factor()
    {
        char c = cur_.peek();
        std::size_t at = cur_.i;
        if (c == '(') {
            ++cur_.i;
            Poly p = parse_expr();
            cur_.expect(')', "parenthesized expression");
            while (cur_.eat('^'))
                p = p.pow(parse_exponent());
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string d = cur_.take_digits();
            Poly p = Poly::constant(ring_, Coef::from_mpq(mpq_class(d), ring_.field()));
            while (cur_.eat('^'))
                p = p.pow(parse_exponent());
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string w = cur_.take_word();
            return parse_word(w, at);
        }
        throw ParseError("expected a coefficient, variable, or '('", at);
    }

    // Greedy longest-prefix segmentation of an alphanumeric word into ring
    // variables; a trailing '^' exponent binds to the last segment.
    Poly parse_word(const std::string& w, std::size_t at)
    {
        Poly acc = one();
        std::size_t pos = 0;
        std::vector<int> segments;
        while (pos < w.size()) {
            int best = -1;
            std::size_t best_len = 0;
            for (int v = 0; v < ring_.nvars(); ++v) {
                const std::string& name = ring_.vars()[v];
                if (name.size() > best_len && w.compare(pos, name.size(), name) == 0) {
                    best = v;
                    best_len = name.size();
                }
            }
            if (best < 0)
                throw ParseError("unknown variable '" + w.substr(pos) + "' in " + ring_.str(),
                                 at + pos);
            segments.push_back(best);
            pos += best_len;
        }
        for (std::size_t k = 0; k + 1 < segments.size(); ++k)
            acc = acc * Poly::variable(ring_, segments[k]);
        Poly last = Poly::variable(ring_, segments.back());
        while (cur_.eat('^'))
            last = last.pow(parse_exponent());
        return acc * last;
    }
};

} // namespace

Ring parse_ring(const std::string& text)
{
    Cursor cur{text};
    std::size_t at = cur.i;
    std::string field_word = cur.take_word();
    FieldSpec field;
    if (field_word == "QQ") {
        // rationals
    } else if (field_word == "Fp") {
        cur.expect('(', "field modulus");
        std::size_t mat = cur.i;
        std::string digits = cur.take_digits();
        if (digits.empty())
            throw ParseError("expected a prime modulus", mat);
        if (digits.size() > 19)
            throw DomainError("prime-field modulus out of range: " + digits);
        field.modulus = std::stoull(digits);
        cur.expect(')', "field modulus");
    } else {
        throw ParseError("unknown coefficient field '" + field_word + "' (expected QQ or Fp(<prime>))", at);
    }
    cur.expect('[', "ring variables");
    std::vector<std::string> vars;
    for (;;) {
        std::size_t vat = cur.i;
        std::string v = cur.take_word();
        if (v.empty())
            throw ParseError("expected a variable name", vat);
        vars.push_back(v);
        if (cur.eat(','))
            continue;
        cur.expect(']', "ring variables");
        break;
    }
    if (!cur.done())
        throw ParseError("trailing input after ring", cur.i);
    return Ring::make(field, std::move(vars), MonomialOrder{});
}

Poly parse_poly(const Ring& ring, const std::string& text)
{
    return PolyParser(ring, text).run();
}

std::vector<Poly> parse_poly_list(const Ring& ring, const std::string& text)
{
    // Split on commas outside parentheses, then parse each piece.
    std::vector<Poly> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(')
            ++depth;
        else if (i < text.size() && text[i] == ')')
            --depth;
        else if (i == text.size() || (text[i] == ',' && depth == 0)) {
            std::string piece = text.substr(start, i - start);
            if (piece.find_first_not_of(" \t\r\n") == std::string::npos)
                throw ParseError("empty entry in polynomial list", start);
            out.push_back(parse_poly(ring, piece));
            start = i + 1;
        }
    }
    return out;
}

} // namespace sympow
