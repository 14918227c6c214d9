#include "mcanon/ideal_io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace mcanon {

namespace {

enum class Tok { Ident, Number, Caret, Star, Comma, Semi, Equals, LParen, RParen, Minus, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blank();
        Token t{Tok::End, "", line_, col_};
        if (pos_ >= src_.size()) return t;
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                advance();
            }
            t.kind = Tok::Ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            t.kind = Tok::Number;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        advance();
        t.text = std::string(1, c);
        switch (c) {
            case '^': t.kind = Tok::Caret; break;
            case '*': t.kind = Tok::Star; break;
            case ',': t.kind = Tok::Comma; break;
            case ';': t.kind = Tok::Semi; break;
            case '=': t.kind = Tok::Equals; break;
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            case '-': t.kind = Tok::Minus; break;
            default: throw ParseError("unexpected character '" + t.text + "'", t.line, t.column);
        }
        return t;
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { cur_ = lex_.next(); }

    IdealFile file() {
        IdealFile out{ring(), MonomialIdeal(0), MonomialIdeal(0)};
        const std::size_t n = out.ring.nvars();
        std::optional<MonomialIdeal> num, den;
        while (cur_.kind != Tok::End) {
            Token name = expect(Tok::Ident, "ideal name");
            if (name.text != "I" && name.text != "J") {
                throw ParseError("unknown ideal name '" + name.text + "' (expected I or J)", name.line, name.column);
            }
            auto& slot = name.text == "I" ? num : den;
            if (slot) throw ParseError("ideal " + name.text + " assigned twice", name.line, name.column);
            expect(Tok::Equals, "'='");
            slot = list(out.ring);
            expect(Tok::Semi, "';'");
        }
        if (!num) throw ParseError("missing assignment for I", cur_.line, cur_.column);
        out.numerator = std::move(*num);
        out.denominator = den ? std::move(*den) : MonomialIdeal::zero(n);
        return out;
    }

    MonomialIdeal bare_list(const Ring& r) {
        MonomialIdeal I = list(r);
        if (cur_.kind == Tok::Semi) take();
        if (cur_.kind != Tok::End) fail("end of input");
        return I;
    }

private:
    Token take() {
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const std::string got = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
        throw ParseError("expected " + expected + ", got " + got, cur_.line, cur_.column);
    }

    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) fail(what);
        return take();
    }

    Ring ring() {
        Token kw = expect(Tok::Ident, "'ring'");
        if (kw.text != "ring") throw ParseError("expected 'ring', got '" + kw.text + "'", kw.line, kw.column);
        Ring r;
        do {
            if (!r.vars.empty()) take();
            Token v = expect(Tok::Ident, "variable name");
            if (r.index_of(v.text) != r.nvars()) {
                throw ParseError("duplicate variable '" + v.text + "'", v.line, v.column);
            }
            r.vars.push_back(v.text);
        } while (cur_.kind == Tok::Comma);
        expect(Tok::Semi, "';'");
        return r;
    }

    MonomialIdeal list(const Ring& r) {
        if (cur_.kind == Tok::LParen) {
            take();
            MonomialIdeal I = list(r);
            expect(Tok::RParen, "')'");
            return I;
        }
        if (cur_.kind == Tok::Number && cur_.text == "0") {
            take();
            return MonomialIdeal::zero(r.nvars());
        }
        std::vector<Monomial> gens;
        gens.push_back(monomial(r));
        while (cur_.kind == Tok::Comma) {
            take();
            gens.push_back(monomial(r));
        }
        return MonomialIdeal(r.nvars(), std::move(gens));
    }

    Monomial monomial(const Ring& r) {
        std::vector<std::uint64_t> exps(r.nvars(), 0);
        if (cur_.kind == Tok::Number) {
            if (cur_.text != "1") fail("monomial (coefficients are not allowed)");
            take();
            return Monomial(r.nvars());
        }
        for (;;) {
            Token v = expect(Tok::Ident, "variable name");
            std::size_t idx = r.index_of(v.text);
            if (idx == r.nvars()) throw ParseError("unknown variable '" + v.text + "'", v.line, v.column);
            std::uint64_t e = 1;
            if (cur_.kind == Tok::Caret) {
                take();
                if (cur_.kind == Tok::Minus) {
                    throw ParseError("negative exponent", cur_.line, cur_.column);
                }
                e = exponent();
            }
            exps[idx] += e;
            if (exps[idx] > kMaxExponent) throw ParseError("exponent exceeds 2^31-1", v.line, v.column);
            if (cur_.kind != Tok::Star) break;
            take();
        }
        return Monomial(std::vector<Exponent>(exps.begin(), exps.end()));
    }

    std::uint64_t exponent() {
        Token t = expect(Tok::Number, "exponent");
        if (t.text.size() > 10) throw ParseError("exponent exceeds 2^31-1", t.line, t.column);
        std::uint64_t e = std::stoull(t.text);
        if (e > kMaxExponent) throw ParseError("exponent exceeds 2^31-1", t.line, t.column);
        return e;
    }

    Lexer lex_;
    Token cur_;
};

}  // namespace

std::size_t Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) return i;
    }
    return vars.size();
}

IdealFile parse_ideal_file(std::string_view text) { return Parser(text).file(); }

MonomialIdeal parse_ideal(std::string_view text, const Ring& ring) { return Parser(text).bare_list(ring); }

std::string to_string(const Monomial& m, const Ring& ring) {
    if (m.nvars() != ring.nvars()) throw DimensionError("monomial does not match ring");
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.vars[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string generators_string(const MonomialIdeal& ideal, const Ring& ring) {
    if (ideal.is_zero()) return "0";
    std::string out;
    for (const auto& g : ideal.gens()) {
        if (!out.empty()) out += ", ";
        out += to_string(g, ring);
    }
    return out;
}

std::string to_string(const MonomialIdeal& ideal, const Ring& ring) {
    return "(" + generators_string(ideal, ring) + ")";
}

std::string to_string(const Factor& f, const Ring& ring) {
    if (f.denominator().is_zero()) return to_string(f.numerator(), ring);
    return to_string(f.numerator(), ring) + " / " + to_string(f.denominator(), ring);
}

std::string to_file_string(const Factor& f, const Ring& ring) {
    std::ostringstream os;
    os << "ring ";
    for (std::size_t i = 0; i < ring.nvars(); ++i) os << (i ? ", " : "") << ring.vars[i];
    os << ";\n";
    os << "I = " << generators_string(f.numerator(), ring) << ";\n";
    os << "J = " << generators_string(f.denominator(), ring) << ";\n";
    return os.str();
}

Ring default_ring(std::size_t nvars) {
    Ring r;
    static const char* small[] = {"x", "y", "z", "t"};
    for (std::size_t i = 0; i < nvars; ++i) {
        r.vars.push_back(nvars <= 4 ? std::string(small[i]) : "x" + std::to_string(i + 1));
    }
    return r;
}

}  // namespace mcanon
