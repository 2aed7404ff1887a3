#include <cctype>
#include <map>

#include "orthoproof/syntax.hpp"

namespace orthoproof {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Tilde, And, Or, Imp, Compat, Turnstile, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto ident_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        std::size_t start = i;
        auto two = [&](const char* t) { return s.compare(i, 2, t) == 0; };
        if (ident_start(c)) {
            while (i < s.size() && ident_char(s[i])) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
        } else if (c == '(') {
            out.push_back({Tok::LParen, "(", start}), ++i;
        } else if (c == ')') {
            out.push_back({Tok::RParen, ")", start}), ++i;
        } else if (c == ',') {
            out.push_back({Tok::Comma, ",", start}), ++i;
        } else if (c == '.') {
            out.push_back({Tok::Dot, ".", start}), ++i;
        } else if (c == '~') {
            out.push_back({Tok::Tilde, "~", start}), ++i;
        } else if (two("/\\")) {
            out.push_back({Tok::And, "/\\", start}), i += 2;
        } else if (two("\\/")) {
            out.push_back({Tok::Or, "\\/", start}), i += 2;
        } else if (two("->")) {
            out.push_back({Tok::Imp, "->", start}), i += 2;
        } else if (two("><")) {
            out.push_back({Tok::Compat, "><", start}), i += 2;
        } else if (two("|-")) {
            out.push_back({Tok::Turnstile, "|-", start}), i += 2;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

bool is_keyword(const std::string& s) { return s == "forall" || s == "exists"; }

class Parser {
public:
    Parser(const std::string& text, const Signature& sig) : toks_(lex(text)), sig_(sig) {}

    Formula formula_top() {
        Formula f = formula();
        expect(Tok::End, "end of input");
        return finish(f);
    }

    Sequent sequent_top() {
        Sequent s;
        if (peek().kind != Tok::Turnstile) {
            s.antecedent.push_back(formula());
            while (peek().kind == Tok::Comma) {
                next();
                s.antecedent.push_back(formula());
            }
        }
        if (peek().kind != Tok::Turnstile) throw ParseError("missing turnstile '|-'", peek().pos);
        next();
        s.succedent = formula();
        expect(Tok::End, "end of input");
        for (auto& a : s.antecedent) a = finish(a);
        s.succedent = finish(s.succedent);
        return s;
    }

    Term term_top() {
        Term t = term();
        expect(Tok::End, "end of input");
        return finish_term(t);
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;
    const Signature& sig_;
    std::map<std::string, std::string> var_sorts_;

    const Token& peek() const { return toks_[at_]; }
    Token next() { return toks_[at_++]; }
    Token expect(Tok k, const char* what) {
        if (peek().kind != k) {
            std::string got = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
            throw ParseError(std::string("expected ") + what + ", got " + got, peek().pos);
        }
        return next();
    }

    Formula formula() { return impterm(); }

    Formula impterm() {
        Formula a = cmpterm();
        if (peek().kind == Tok::Imp) {
            next();
            return Formula::imp(a, impterm());
        }
        return a;
    }

    Formula cmpterm() {
        Formula a = orterm();
        if (peek().kind == Tok::Compat) {
            next();
            return Formula::compat(a, orterm());
        }
        return a;
    }

    Formula orterm() {
        Formula a = andterm();
        while (peek().kind == Tok::Or) {
            next();
            a = Formula::disj(a, andterm());
        }
        return a;
    }

    Formula andterm() {
        Formula a = unary();
        while (peek().kind == Tok::And) {
            next();
            a = Formula::conj(a, unary());
        }
        return a;
    }

    Formula unary() {
        if (peek().kind == Tok::Tilde) {
            next();
            return Formula::neg(unary());
        }
        return atom();
    }

    Formula atom() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            next();
            Formula f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (t.kind != Tok::Ident) throw ParseError("expected formula, got '" + t.text + "'", t.pos);
        Token id = next();
        if (is_keyword(id.text)) {
            Token v = expect(Tok::Ident, "bound variable");
            if (is_keyword(v.text)) throw ParseError("keyword used as variable", v.pos);
            if (sig_.constants.count(v.text)) throw ParseError("constant '" + v.text + "' cannot be bound", v.pos);
            expect(Tok::Dot, "'.'");
            Formula body = formula();
            Variable x{v.text, ""};
            return id.text == "forall" ? Formula::forall(x, body) : Formula::exists(x, body);
        }
        if (peek().kind != Tok::LParen) {
            if (sig_.relations.count(id.text) && !sig_.relations.at(id.text).empty())
                throw ParseError("relation '" + id.text + "' expects arguments", id.pos);
            return Formula::letter(id.text);
        }
        next();
        std::vector<Term> args;
        args.push_back(term());
        while (peek().kind == Tok::Comma) {
            next();
            args.push_back(term());
        }
        expect(Tok::RParen, "')'");
        auto rel = sig_.relations.find(id.text);
        if (rel == sig_.relations.end()) {
            if (!sig_.open) throw ParseError("undeclared relation symbol '" + id.text + "'", id.pos);
        } else {
            if (rel->second.size() != args.size())
                throw ParseError("relation '" + id.text + "' expects " + std::to_string(rel->second.size()) +
                                     " arguments, got " + std::to_string(args.size()),
                                 id.pos);
            for (std::size_t i = 0; i < args.size(); ++i) constrain(args[i], rel->second[i], id.pos);
        }
        return Formula::atom(id.text, std::move(args));
    }

    Term term() {
        Token id = expect(Tok::Ident, "term");
        if (is_keyword(id.text)) throw ParseError("keyword used as term", id.pos);
        if (peek().kind == Tok::LParen) {
            next();
            std::vector<Term> args;
            args.push_back(term());
            while (peek().kind == Tok::Comma) {
                next();
                args.push_back(term());
            }
            expect(Tok::RParen, "')'");
            auto fn = sig_.functions.find(id.text);
            if (fn == sig_.functions.end()) {
                if (!sig_.open) throw ParseError("undeclared function symbol '" + id.text + "'", id.pos);
                return Term::app(id.text, std::move(args), sig_.default_sort());
            }
            if (fn->second.first.size() != args.size())
                throw ParseError("function '" + id.text + "' expects " + std::to_string(fn->second.first.size()) +
                                     " arguments, got " + std::to_string(args.size()),
                                 id.pos);
            for (std::size_t i = 0; i < args.size(); ++i) constrain(args[i], fn->second.first[i], id.pos);
            return Term::app(id.text, std::move(args), fn->second.second);
        }
        auto c = sig_.constants.find(id.text);
        if (c != sig_.constants.end()) return Term::constant(id.text, c->second);
        return Term::var(id.text, "");
    }

    void constrain(const Term& t, const std::string& sort, std::size_t pos) {
        if (t.kind() == Term::Kind::Var) {
            auto [it, fresh] = var_sorts_.emplace(t.name(), sort);
            if (!fresh && it->second != sort)
                throw ParseError("sort mismatch for variable '" + t.name() + "': " + it->second + " vs " + sort,
                                 pos);
            return;
        }
        if (t.sort() != sort)
            throw ParseError("sort mismatch: '" + render(t) + "' has sort " + t.sort() + ", expected " + sort, pos);
    }

    std::string sort_of(const std::string& var) const {
        auto it = var_sorts_.find(var);
        return it == var_sorts_.end() ? sig_.default_sort() : it->second;
    }

    Term finish_term(const Term& t) {
        switch (t.kind()) {
            case Term::Kind::Var:
                return Term::var(t.name(), sort_of(t.name()));
            case Term::Kind::Const:
                return t;
            case Term::Kind::App: {
                std::vector<Term> args;
                for (const auto& a : t.args()) args.push_back(finish_term(a));
                return Term::app(t.name(), std::move(args), t.sort());
            }
        }
        return t;
    }

    Formula finish(const Formula& f) {
        switch (f.kind()) {
            case Connective::Letter:
                return f;
            case Connective::Atom: {
                std::vector<Term> args;
                for (const auto& a : f.args()) args.push_back(finish_term(a));
                return Formula::atom(f.name(), std::move(args));
            }
            case Connective::Neg:
                return Formula::neg(finish(f.lhs()));
            case Connective::And:
                return Formula::conj(finish(f.lhs()), finish(f.rhs()));
            case Connective::Imp:
                return Formula::imp(finish(f.lhs()), finish(f.rhs()));
            case Connective::Or:
                return Formula::disj(finish(f.lhs()), finish(f.rhs()));
            case Connective::Compat:
                return Formula::compat(finish(f.lhs()), finish(f.rhs()));
            case Connective::Forall:
                return Formula::forall({f.bound().name, sort_of(f.bound().name)}, finish(f.body()));
            case Connective::Exists:
                return Formula::exists({f.bound().name, sort_of(f.bound().name)}, finish(f.body()));
        }
        return f;
    }
};

}  // namespace

Formula parse_formula(const std::string& text, const Signature& sig) { return Parser(text, sig).formula_top(); }

Sequent parse_sequent(const std::string& text, const Signature& sig) { return Parser(text, sig).sequent_top(); }

Term parse_term(const std::string& text, const Signature& sig) { return Parser(text, sig).term_top(); }

}  // namespace orthoproof
