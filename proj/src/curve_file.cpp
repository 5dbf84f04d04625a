#include "ellop/curve_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace ellop {

namespace {

// Recursive-descent parser for integer/parameter expressions:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer | symbol | '-' atom | '(' expr ')'
class ExprParser {
  public:
    ExprParser(const std::string& s, const SymbolsPtr& syms, int line)
        : s_(s), syms_(syms), line_(line) {}

    ParamPoly parse() {
        ParamPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input '" + s_.substr(pos_) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) { throw CurveFileError(msg, line_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamPoly expr() {
        ParamPoly acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    ParamPoly term() {
        ParamPoly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    ParamPoly factor() {
        ParamPoly base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent after '^'");
            base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    ParamPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (c == '(') {
            ++pos_;
            ParamPoly p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ParamPoly::constant(syms_, Rat(Int(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < syms_->size(); ++i)
                if ((*syms_)[i] == name) return ParamPoly::variable(syms_, i);
            fail("unknown parameter '" + name + "' (declare it with 'params')");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    SymbolsPtr syms_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace

WeierstrassCurve parse_curve_file(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    SymbolsPtr syms = no_symbols();
    std::map<std::string, ParamPoly> entries;
    std::map<std::string, int> entry_lines;
    bool params_seen = false;

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "params") {
            if (params_seen) throw CurveFileError("duplicate 'params' line", lineno);
            if (!entries.empty())
                throw CurveFileError("'params' must precede the coefficient entries", lineno);
            params_seen = true;
            SymbolList names;
            std::string sym;
            while (ls >> sym) names.push_back(sym);
            syms = make_symbols(std::move(names));
            continue;
        }
        if (key == "a1" || key == "a2" || key == "a3" || key == "a4" || key == "a6") {
            if (entries.count(key))
                throw CurveFileError("duplicate entry for " + key + " (first at line " +
                                         std::to_string(entry_lines[key]) + ")",
                                     lineno);
            std::string rest;
            std::getline(ls, rest);
            // allow "a2 = expr" as well as "a2 expr"
            std::size_t eq = rest.find('=');
            if (eq != std::string::npos) rest = rest.substr(eq + 1);
            if (rest.find_first_not_of(" \t") == std::string::npos)
                throw CurveFileError("missing expression for " + key, lineno);
            entries.emplace(key, ExprParser(rest, syms, lineno).parse());
            entry_lines[key] = lineno;
            continue;
        }
        throw CurveFileError("unrecognized directive '" + key + "'", lineno);
    }
    for (const char* key : {"a1", "a2", "a3", "a4", "a6"})
        if (!entries.count(key))
            throw CurveFileError(std::string("missing coefficient ") + key, lineno);
    return WeierstrassCurve::from_coefficients(syms, entries.at("a1"), entries.at("a2"),
                                               entries.at("a3"), entries.at("a4"),
                                               entries.at("a6"), name);
}

WeierstrassCurve load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_file(ss.str(), path);
}

WeierstrassCurve resolve_curve(const std::string& spec) {
    if (spec == "general") return WeierstrassCurve::general();
    if (spec == "legendre") return WeierstrassCurve::legendre();
    if (spec == "tate-singular") return WeierstrassCurve::tate_singular();
    return load_curve_file(spec);
}

}  // namespace ellop
