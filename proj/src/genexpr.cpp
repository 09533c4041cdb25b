#include "cymat/genexpr.hpp"

#include <cctype>

namespace cymat {

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    auto skip = [&]() {
        while (i < text.size() &&
               (std::isspace(uint8_t(text[i])) || text[i] == '{' || text[i] == '}'))
            ++i;
    };
    while (true) {
        skip();
        if (i >= text.size()) break;
        size_t pos = i;
        char c = text[i];
        if (c == 'w' || c == 'u' || c == 'v') {
            out.push_back({Token::Sym, c, 0, pos});
            ++i;
        } else if (c == 'f') {
            ++i;
            if (i < text.size() && text[i] == '_') ++i;
            skip();
            if (i >= text.size() || !std::isdigit(uint8_t(text[i])))
                throw GenExprError("factor reference 'f' without index", pos);
            long v = 0;
            while (i < text.size() && std::isdigit(uint8_t(text[i]))) v = v * 10 + (text[i++] - '0');
            out.push_back({Token::FIdx, 0, v, pos});
        } else if (std::isdigit(uint8_t(c))) {
            long v = 0;
            while (i < text.size() && std::isdigit(uint8_t(text[i]))) v = v * 10 + (text[i++] - '0');
            out.push_back({Token::Int, 0, v, pos});
        } else if (c == '^') {
            out.push_back({Token::Caret, 0, 0, pos});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::Star, 0, 0, pos});
            ++i;
        } else if (c == '+') {
            out.push_back({Token::Plus, 0, 0, pos});
            ++i;
        } else if (c == '(') {
            out.push_back({Token::LParen, 0, 0, pos});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::RParen, 0, 0, pos});
            ++i;
        } else {
            throw GenExprError(std::string("unexpected character '") + c + "'", pos);
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::vector<Token> toks, const FactorSet& factors, int k)
        : toks_(std::move(toks)), factors_(factors), k_(k),
          ctx_(RingContext::get(k)) {}

    RPoly run() {
        if (toks_.empty()) throw GenExprError("empty expression", 0);
        RPoly r = expr();
        if (i_ < toks_.size()) throw GenExprError("trailing input", toks_[i_].pos);
        return r;
    }

private:
    bool at(Token::Kind k) const { return i_ < toks_.size() && toks_[i_].kind == k; }
    const Token& cur() const { return toks_[i_]; }
    size_t cur_pos() const { return i_ < toks_.size() ? toks_[i_].pos : (toks_.empty() ? 0 : toks_.back().pos + 1); }

    bool starts_atom() const {
        if (i_ >= toks_.size()) return false;
        switch (toks_[i_].kind) {
            case Token::Sym:
            case Token::FIdx:
            case Token::Int:
            case Token::LParen: return true;
            default: return false;
        }
    }

    RPoly expr() {
        RPoly acc = term();
        while (at(Token::Plus)) {
            ++i_;
            acc = rp_add(acc, term());
        }
        return acc;
    }

    RPoly term() {
        RPoly acc = factor();
        while (true) {
            if (at(Token::Star)) {
                ++i_;
                acc = rp_mul(ctx_, acc, factor());
            } else if (starts_atom()) {
                acc = rp_mul(ctx_, acc, factor()); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    RPoly factor() {
        // exponent applies to the atom; symbol exponents are handled natively
        // so that w^20 reduces mod 15 and u^k, v^4 collapse to zero.
        if (at(Token::Sym)) {
            Token t = cur();
            ++i_;
            long e = maybe_exponent();
            return symbol_power(t.sym, e, t.pos);
        }
        RPoly base = atom();
        long e = maybe_exponent();
        if (e == 1) return base;
        RPoly acc = RPoly::one(factors_.n, k_);
        for (long t = 0; t < e; ++t) acc = rp_mul(ctx_, acc, base);
        return acc;
    }

    long maybe_exponent() {
        if (!at(Token::Caret)) return 1;
        ++i_;
        if (!at(Token::Int)) throw GenExprError("expected integer exponent after '^'", cur_pos());
        long e = cur().value;
        ++i_;
        if (e < 0) throw GenExprError("negative exponent", cur_pos());
        return e;
    }

    RPoly symbol_power(char sym, long e, size_t pos) {
        int n = factors_.n;
        if (sym == 'w') {
            RPoly p = RPoly::zero(n, k_);
            p.c[0] = RElem::monomial(k_, 0, 0, F16::w_pow(e));
            return p;
        }
        if (sym == 'u') {
            RPoly p = RPoly::zero(n, k_);
            if (e < k_) p.c[0] = RElem::monomial(k_, int(e), 0, F16::one());
            return p;
        }
        if (sym == 'v') {
            RPoly p = RPoly::zero(n, k_);
            if (e < 4) p.c[0] = RElem::monomial(k_, 0, int(e), F16::one());
            return p;
        }
        throw GenExprError("unknown symbol", pos);
    }

    RPoly atom() {
        if (at(Token::FIdx)) {
            long idx = cur().value;
            size_t pos = cur().pos;
            ++i_;
            if (idx < 1 || idx > long(factors_.factors.size()))
                throw GenExprError("factor index f" + std::to_string(idx) + " not in table (m = " +
                                       std::to_string(factors_.factors.size()) + ")",
                                   pos);
            return rp_lift(factors_.at1(int(idx)), factors_.n, k_);
        }
        if (at(Token::Int)) {
            long v = cur().value;
            ++i_;
            RPoly p = RPoly::zero(factors_.n, k_);
            if (v % 2) p.c[0] = RElem::one(k_);
            return p;
        }
        if (at(Token::LParen)) {
            ++i_;
            RPoly inner = expr();
            if (!at(Token::RParen)) throw GenExprError("expected ')'", cur_pos());
            ++i_;
            return inner;
        }
        throw GenExprError("expected atom", cur_pos());
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
    const FactorSet& factors_;
    int k_;
    const RingContext& ctx_;
};

} // namespace

RPoly parse_genexpr(const std::string& text, const FactorSet& factors, int k) {
    return Parser(tokenize(text), factors, k).run();
}

std::string format_genexpr(const RingContext& ctx, const RPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = 0; d < p.n; ++d) {
        const RElem& a = p.c[size_t(d)];
        if (a.is_zero()) continue;
        std::string coeff = relem_str(ctx, a);
        bool composite = coeff.find(" + ") != std::string::npos;
        std::string term;
        if (d == 0) {
            term = composite ? "(" + coeff + ")" : coeff;
        } else {
            std::string xpart = (d == 1) ? "(f1 + 1)" : "(f1 + 1)^" + std::to_string(d);
            if (coeff == "1")
                term = xpart;
            else
                term = (composite ? "(" + coeff + ")" : coeff) + "*" + xpart;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

} // namespace cymat
