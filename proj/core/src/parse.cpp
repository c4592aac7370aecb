#include "varbico/parse.hpp"

#include <cctype>

namespace varbico {

namespace {

enum class Tok {
    ident, number, lparen, rparen, lbrace, rbrace, comma, semi, colon,
    arrow, wedge, plus, minus, star, slash, caret, equals, end
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip();
        tok_ = Token{Tok::end, "", line_, col_};
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                step();
            tok_.kind = Tok::ident;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                step();
            tok_.kind = Tok::number;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        auto two = [this](char a, char b) {
            return text_[pos_] == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
        };
        if (two('/', '\\')) { tok_.kind = Tok::wedge; step(); step(); return; }
        if (two('-', '>')) { tok_.kind = Tok::arrow; step(); step(); return; }
        switch (c) {
            case '(': tok_.kind = Tok::lparen; break;
            case ')': tok_.kind = Tok::rparen; break;
            case '{': tok_.kind = Tok::lbrace; break;
            case '}': tok_.kind = Tok::rbrace; break;
            case ',': tok_.kind = Tok::comma; break;
            case ';': tok_.kind = Tok::semi; break;
            case ':': tok_.kind = Tok::colon; break;
            case '+': tok_.kind = Tok::plus; break;
            case '-': tok_.kind = Tok::minus; break;
            case '*': tok_.kind = Tok::star; break;
            case '/': tok_.kind = Tok::slash; break;
            case '^': tok_.kind = Tok::caret; break;
            case '=': tok_.kind = Tok::equals; break;
            default:
                throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
        }
        step();
    }

    void skip() {
        for (;;) {
            while (pos_ < text_.size() &&
                   std::isspace(static_cast<unsigned char>(text_[pos_])))
                step();
            if (pos_ < text_.size() && text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') step();
                continue;
            }
            break;
        }
    }

    void step() {
        if (text_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Session parse_file() {
        while (lex_.peek().kind != Tok::end) {
            Token t = expect(Tok::ident, "statement");
            if (t.text == "bundle") parse_bundle(t);
            else if (t.text == "def") parse_def(t);
            else if (t.text == "sys") parse_sys(t);
            else if (t.text == "cmd") parse_cmd(t);
            else throw ParseError(t.line, t.col, "expected 'bundle', 'def', 'sys' or 'cmd'");
        }
        return std::move(session_);
    }

    BiForm parse_single_expression(const Signature& sig) {
        session_.signature = sig;
        have_bundle_ = true;
        BiForm value = parse_expr();
        if (lex_.peek().kind != Tok::end)
            throw ParseError(lex_.peek().line, lex_.peek().col, "trailing input after expression");
        return value;
    }

private:
    Token expect(Tok kind, const char* what) {
        Token t = lex_.take();
        if (t.kind != kind)
            throw ParseError(t.line, t.col, std::string("expected ") + what);
        return t;
    }

    const Signature& sig() const { return session_.signature; }

    void require_bundle(const Token& at) {
        if (!have_bundle_)
            throw ParseError(at.line, at.col, "a 'bundle' statement must come first");
    }

    static bool reserved_word(const std::string& word) {
        return word == "bundle" || word == "def" || word == "sys" || word == "cmd" ||
               word == "jet" || word == "dx" || word == "dv" || word == "lag" ||
               word == "form" || word == "src";
    }

    void check_fresh_name(const Token& name) {
        if (reserved_word(name.text))
            throw ParseError(name.line, name.col, "'" + name.text + "' is a reserved word");
        if (session_.defs.count(name.text) || session_.systems.count(name.text))
            throw ParseError(name.line, name.col, "name '" + name.text + "' already defined");
        if (sig().indep_index(name.text) || sig().dep_index(name.text))
            throw ParseError(name.line, name.col,
                             "name '" + name.text + "' shadows a bundle variable");
    }

    // bundle := "bundle" "(" ident ("," ident)* ")" "(" ident ("," ident)* ")"
    void parse_bundle(const Token& at) {
        if (have_bundle_)
            throw ParseError(at.line, at.col, "duplicate 'bundle' statement");
        auto name_list = [this] {
            expect(Tok::lparen, "'('");
            std::vector<std::string> names;
            for (;;) {
                names.push_back(expect(Tok::ident, "variable name").text);
                if (lex_.peek().kind == Tok::comma) { lex_.take(); continue; }
                if (lex_.peek().kind == Tok::ident) continue; // commas optional
                break;
            }
            expect(Tok::rparen, "')'");
            return names;
        };
        std::vector<std::string> indep = name_list();
        std::vector<std::string> dep = name_list();
        try {
            session_.signature = Signature(std::move(indep), std::move(dep));
        } catch (const Error& e) {
            throw ParseError(at.line, at.col, e.what());
        }
        have_bundle_ = true;
    }

    void parse_def(const Token& at) {
        require_bundle(at);
        Token name = expect(Tok::ident, "definition name");
        check_fresh_name(name);
        expect(Tok::colon, "':'");
        Token kind_tok = expect(Tok::ident, "'lag', 'form' or 'src'");
        DefKind kind;
        if (kind_tok.text == "lag") kind = DefKind::lagrangian;
        else if (kind_tok.text == "form") kind = DefKind::form;
        else if (kind_tok.text == "src") kind = DefKind::source;
        else throw ParseError(kind_tok.line, kind_tok.col, "expected 'lag', 'form' or 'src'");
        expect(Tok::equals, "'='");
        BiForm value = parse_expr();

        Definition def;
        def.kind = kind;
        if (kind == DefKind::lagrangian) {
            if (!value.is_homogeneous({sig().n(), 0}))
                throw ParseError(name.line, name.col,
                                 "'" + name.text + "': a Lagrangian must be homogeneous of "
                                 "grading (n,0) with an explicit volume factor");
            def.value = std::move(value);
        } else if (kind == DefKind::source) {
            def.source = to_source_form(value, name);
            def.value = std::move(value);
        } else {
            def.value = std::move(value);
        }
        session_.defs.emplace(name.text, std::move(def));
        session_.definition_order.push_back(name.text);
    }

    SourceForm to_source_form(const BiForm& value, const Token& at) {
        const int n = sig().n();
        SourceForm out(sig().m());
        if (!value.is_homogeneous({n, 1}))
            throw ParseError(at.line, at.col,
                             "'" + at.text + "': a source form must be homogeneous of grading (n,1)");
        for (const auto& [w, c] : value.terms()) {
            if (w.vgen[0].order() != 0)
                throw ParseError(at.line, at.col,
                                 "'" + at.text + "': a source form may only carry dv factors "
                                 "of underived dependent variables");
            JetPoly f = (n % 2 == 0) ? c : -c;
            out.set_coeff(w.vgen[0].dep, f);
        }
        return out;
    }

    void parse_sys(const Token& at) {
        require_bundle(at);
        Token name = expect(Tok::ident, "system name");
        check_fresh_name(name);
        expect(Tok::lbrace, "'{'");
        std::vector<Rule> rules;
        for (;;) {
            Token jt = expect(Tok::ident, "'jet'");
            if (jt.text != "jet")
                throw ParseError(jt.line, jt.col, "a rule must start with a jet variable");
            JetVar lead = parse_jet_tail(jt);
            expect(Tok::arrow, "'->'");
            BiForm rhs = parse_expr();
            auto g = rhs.grading();
            if (!rhs.is_zero() && (!g || *g != Grading{0, 0}))
                throw ParseError(jt.line, jt.col, "a rule right-hand side must be a scalar");
            JetPoly rhs_poly;
            if (!rhs.is_zero()) rhs_poly = rhs.terms().begin()->second;
            rules.push_back(Rule{lead, std::move(rhs_poly)});
            if (lex_.peek().kind == Tok::comma) { lex_.take(); continue; }
            break;
        }
        expect(Tok::rbrace, "'}'");
        try {
            session_.systems.emplace(name.text,
                                     OrthonomicSystem::make(sig(), std::move(rules)));
        } catch (const Error& e) {
            throw ParseError(name.line, name.col, e.what());
        }
        session_.definition_order.push_back(name.text);
    }

    void parse_cmd(const Token& at) {
        require_bundle(at);
        Token verb = expect(Tok::ident, "command verb");
        Command cmd;
        cmd.verb = verb.text;
        cmd.line = verb.line;
        cmd.col = verb.col;
        while (lex_.peek().kind == Tok::ident && !reserved_word(lex_.peek().text))
            cmd.args.push_back(lex_.take().text);
        validate_command(cmd, verb);
        session_.commands.push_back(std::move(cmd));
    }

    void validate_command(const Command& cmd, const Token& at) {
        auto need = [&](size_t count) {
            if (cmd.args.size() != count)
                throw ParseError(at.line, at.col,
                                 "'" + cmd.verb + "' takes " + std::to_string(count) +
                                 " argument(s)");
        };
        auto arg_def = [&](size_t i, DefKind kind, const char* what) {
            auto it = session_.defs.find(cmd.args[i]);
            if (it == session_.defs.end() || it->second.kind != kind)
                throw ParseError(at.line, at.col,
                                 "'" + cmd.args[i] + "' is not a defined " + what);
        };
        auto arg_formlike = [&](size_t i) {
            auto it = session_.defs.find(cmd.args[i]);
            if (it == session_.defs.end() ||
                (it->second.kind != DefKind::form && it->second.kind != DefKind::lagrangian))
                throw ParseError(at.line, at.col,
                                 "'" + cmd.args[i] + "' is not a defined form or Lagrangian");
        };
        auto arg_sys = [&](size_t i) {
            if (!session_.systems.count(cmd.args[i]))
                throw ParseError(at.line, at.col,
                                 "'" + cmd.args[i] + "' is not a defined system");
        };
        if (cmd.verb == "el" || cmd.verb == "theta" || cmd.verb == "omega") {
            need(1);
            arg_def(0, DefKind::lagrangian, "Lagrangian");
        } else if (cmd.verb == "helmholtz" || cmd.verb == "vainberg") {
            need(1);
            arg_def(0, DefKind::source, "source form");
        } else if (cmd.verb == "reduce") {
            need(2);
            arg_sys(0);
            arg_formlike(1);
        } else if (cmd.verb == "checkomega" || cmd.verb == "reconstruct") {
            need(2);
            arg_sys(0);
            arg_formlike(1);
        } else if (cmd.verb == "compare") {
            need(3);
            arg_def(0, DefKind::lagrangian, "Lagrangian");
            arg_def(1, DefKind::lagrangian, "Lagrangian");
            arg_sys(2);
        } else {
            throw ParseError(at.line, at.col, "unknown command verb '" + cmd.verb + "'");
        }
    }

    // jet := "jet" "(" ident (";" ident ("," ident)*)? ")", 'jet' already consumed
    JetVar parse_jet_tail(const Token& at) {
        expect(Tok::lparen, "'('");
        Token dep = expect(Tok::ident, "dependent variable");
        auto a = sig().dep_index(dep.text);
        if (!a)
            throw ParseError(dep.line, dep.col,
                             "'" + dep.text + "' is not a dependent variable");
        MultiIndex idx;
        if (lex_.peek().kind == Tok::semi) {
            lex_.take();
            for (;;) {
                Token iv = expect(Tok::ident, "independent variable");
                auto i = sig().indep_index(iv.text);
                if (!i)
                    throw ParseError(iv.line, iv.col,
                                     "'" + iv.text + "' is not an independent variable");
                idx = idx.plus(*i);
                if (lex_.peek().kind == Tok::comma) { lex_.take(); continue; }
                break;
            }
        }
        expect(Tok::rparen, "')'");
        (void)at;
        return jet(*a, idx);
    }

    // expr := ["-"] wedgechain (("+"|"-") wedgechain)*
    BiForm parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::minus) { lex_.take(); negate = true; }
        BiForm acc = parse_wedge();
        if (negate) acc = -acc;
        for (;;) {
            if (lex_.peek().kind == Tok::plus) {
                lex_.take();
                acc += parse_wedge();
            } else if (lex_.peek().kind == Tok::minus) {
                lex_.take();
                acc -= parse_wedge();
            } else {
                return acc;
            }
        }
    }

    BiForm parse_wedge() {
        BiForm acc = parse_mul();
        while (lex_.peek().kind == Tok::wedge) {
            lex_.take();
            acc = wedge(acc, parse_mul());
        }
        return acc;
    }

    BiForm parse_mul() {
        BiForm acc = parse_pow();
        for (;;) {
            if (lex_.peek().kind == Tok::star) {
                lex_.take();
                acc = wedge(acc, parse_pow());
            } else if (lex_.peek().kind == Tok::slash) {
                Token t = lex_.take();
                BiForm denom = parse_pow();
                auto g = denom.grading();
                std::optional<Rational> value;
                if (denom.is_zero())
                    throw ParseError(t.line, t.col, "division by zero");
                if (g && *g == Grading{0, 0})
                    value = denom.terms().begin()->second.constant_value();
                if (!value)
                    throw ParseError(t.line, t.col, "divisor must be a nonzero rational constant");
                acc = acc.scaled(Rational(1) / *value);
            } else {
                return acc;
            }
        }
    }

    BiForm parse_pow() {
        Token at = lex_.peek();
        BiForm base = parse_atom();
        if (lex_.peek().kind != Tok::caret) return base;
        Token caret = lex_.take();
        Token exp = expect(Tok::number, "integer exponent");
        auto g = base.grading();
        if (!base.is_zero() && (!g || *g != Grading{0, 0}))
            throw ParseError(caret.line, caret.col, "'^' applies to scalars only");
        JetPoly p;
        if (!base.is_zero()) p = base.terms().begin()->second;
        int e = 0;
        try {
            e = std::stoi(exp.text);
        } catch (...) {
            throw ParseError(exp.line, exp.col, "exponent out of range");
        }
        (void)at;
        return BiForm(p.pow(e));
    }

    BiForm parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::number:
                return BiForm(JetPoly(Rational(t.text)));
            case Tok::lparen: {
                BiForm inner = parse_expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::ident: {
                if (t.text == "jet")
                    return BiForm(JetPoly::jet_var(parse_jet_tail(t)));
                if (t.text == "dx") {
                    expect(Tok::lparen, "'('");
                    Token iv = expect(Tok::ident, "independent variable");
                    auto i = sig().indep_index(iv.text);
                    if (!i)
                        throw ParseError(iv.line, iv.col,
                                         "'" + iv.text + "' is not an independent variable");
                    expect(Tok::rparen, "')'");
                    return BiForm::dx(*i);
                }
                if (t.text == "dv") {
                    expect(Tok::lparen, "'('");
                    Token jt = expect(Tok::ident, "'jet'");
                    if (jt.text != "jet")
                        throw ParseError(jt.line, jt.col, "dv() takes a jet variable");
                    JetVar v = parse_jet_tail(jt);
                    expect(Tok::rparen, "')'");
                    return BiForm::dv_gen(v);
                }
                if (auto i = sig().indep_index(t.text))
                    return BiForm(JetPoly::base_var(*i));
                if (sig().dep_index(t.text))
                    throw ParseError(t.line, t.col,
                                     "dependent variable '" + t.text + "' must be written jet(" +
                                     t.text + ")");
                if (auto it = session_.defs.find(t.text); it != session_.defs.end()) {
                    if (it->second.kind == DefKind::source)
                        throw ParseError(t.line, t.col,
                                         "source form '" + t.text + "' cannot be used in an expression");
                    return it->second.value;
                }
                throw ParseError(t.line, t.col, "unknown name '" + t.text + "'");
            }
            default:
                throw ParseError(t.line, t.col, "expected an expression");
        }
    }

    Lexer lex_;
    Session session_;
    bool have_bundle_ = false;
};

} // namespace

Session parse_session(const std::string& text) {
    return Parser(text).parse_file();
}

BiForm parse_expression(const std::string& text, const Signature& sig) {
    return Parser(text).parse_single_expression(sig);
}

} // namespace varbico
