#include "cremona/parse.hpp"

#include <cctype>

namespace cremona {

namespace {

class PolyParser {
public:
    PolyParser(const std::string& src, int n) : src_(src), n_(n) {}

    Poly parse() {
        Poly p = parse_poly_body();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Int parse_nat() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected a number");
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return Int(src_.substr(start, pos_ - start));
    }

    int parse_small_nat(const char* what, int limit) {
        Int v = parse_nat();
        if (v > limit) fail(std::string(what) + " out of range");
        return static_cast<int>(v);
    }

    // atom := coeff | "x" nat ["^" nat]
    Poly parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected a factor");
        if (src_[pos_] == 'x') {
            ++pos_;
            int i = parse_small_nat("variable index", 1 << 20);
            if (i < 1 || i > n_) fail("variable index out of range");
            int k = 1;
            if (accept('^')) k = parse_small_nat("exponent", 1 << 20);
            ExponentVec alpha(n_, 0);
            alpha[i - 1] = k;
            return Poly::monomial(n_, alpha, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            Int num = parse_nat();
            Rat c(num);
            if (accept('/')) {
                Int den = parse_nat();
                if (den == 0) fail("zero denominator");
                c = Rat(num, den);
            }
            return Poly::constant(n_, c);
        }
        fail("expected a coefficient or a variable");
    }

    Poly parse_term() {
        Poly p = parse_atom();
        while (accept('*')) p = p * parse_atom();
        return p;
    }

    Poly parse_poly_body() {
        Poly p(n_);
        bool neg = accept('-');
        if (!neg) accept('+');
        p = neg ? -parse_term() : parse_term();
        for (;;) {
            if (accept('+'))
                p = p + parse_term();
            else if (accept('-'))
                p = p - parse_term();
            else
                break;
        }
        return p;
    }

    const std::string& src_;
    int n_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_top_level(const std::string& src, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : src) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Poly parse_poly(const std::string& src, int n) {
    if (src.empty()) throw parse_error("empty polynomial", 0);
    return PolyParser(src, n).parse();
}

namespace {

// One "<poly> d/dx<i>" summand of the operator form.
void parse_operator_chunk(const std::string& chunk, int sign, int n,
                          std::vector<Poly>& images) {
    const std::size_t at = chunk.find("d/dx");
    if (at == std::string::npos)
        throw parse_error("expected d/dx<i> in derivation term", 0);
    std::string head = chunk.substr(0, at);
    // strip trailing whitespace and an optional '*'
    while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
    if (!head.empty() && head.back() == '*') head.pop_back();
    std::size_t p = at + 4;
    std::size_t start = p;
    while (p < chunk.size() && std::isdigit(static_cast<unsigned char>(chunk[p]))) ++p;
    if (p == start) throw parse_error("expected generator index after d/dx", at + 4);
    const int i = std::stoi(chunk.substr(start, p - start));
    if (i < 1 || i > n) throw parse_error("generator index out of range", start);
    while (p < chunk.size()) {
        if (!std::isspace(static_cast<unsigned char>(chunk[p])))
            throw parse_error("unexpected trailing input after d/dx term", p);
        ++p;
    }
    Poly coeff = head.empty() ? Poly::constant(n, 1) : parse_poly(head, n);
    if (sign < 0) coeff = -coeff;
    images[i - 1] = images[i - 1] + coeff;
}

}  // namespace

Derivation parse_derivation(const std::string& src, int n) {
    if (src.empty()) throw parse_error("empty derivation", 0);
    std::vector<Poly> images(n, Poly::zero(n));
    if (src.find("d/dx") != std::string::npos) {
        // Split into signed summands. Signs only appear between summands or
        // leading: the grammar has no parentheses and exponents are natural.
        std::string chunk;
        int sign = 1;
        bool any = false;
        std::size_t k = 0;
        while (k < src.size() && std::isspace(static_cast<unsigned char>(src[k]))) ++k;
        if (k < src.size() && (src[k] == '-' || src[k] == '+')) {
            sign = src[k] == '-' ? -1 : 1;
            ++k;
        }
        for (; k < src.size(); ++k) {
            const char c = src[k];
            if (c == '+' || c == '-') {
                parse_operator_chunk(chunk, sign, n, images);
                any = true;
                chunk.clear();
                sign = c == '-' ? -1 : 1;
            } else {
                chunk += c;
            }
        }
        parse_operator_chunk(chunk, sign, n, images);
        (void)any;
    } else {
        std::vector<std::string> parts = split_top_level(src, ',');
        if (static_cast<int>(parts.size()) != n)
            throw parse_error("expected " + std::to_string(n) + " comma-separated images, got " +
                                  std::to_string(parts.size()),
                              0);
        for (int j = 0; j < n; ++j) images[j] = parse_poly(parts[j], n);
    }
    return Derivation(n, std::move(images));
}

Rat parse_rat(const std::string& src) {
    std::size_t k = 0;
    auto ws = [&] {
        while (k < src.size() && std::isspace(static_cast<unsigned char>(src[k]))) ++k;
    };
    ws();
    bool neg = false;
    if (k < src.size() && (src[k] == '-' || src[k] == '+')) {
        neg = src[k] == '-';
        ++k;
    }
    ws();
    std::size_t start = k;
    while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
    if (k == start) throw parse_error("expected a rational number", k);
    Int num(src.substr(start, k - start));
    Int den(1);
    ws();
    if (k < src.size() && src[k] == '/') {
        ++k;
        ws();
        start = k;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
        if (k == start) throw parse_error("expected a denominator", k);
        den = Int(src.substr(start, k - start));
        if (den == 0) throw parse_error("zero denominator", start);
    }
    ws();
    if (k != src.size()) throw parse_error("unexpected trailing input", k);
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

}  // namespace cremona
