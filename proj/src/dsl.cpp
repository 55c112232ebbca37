#include "cliffspec/dsl.hpp"

#include <bit>
#include <cstdlib>

namespace cliffspec {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    SliceFunction parse() {
        SliceFunction f = expr();
        ws();
        if (pos_ != s_.size()) fail("trailing input");
        return f;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("DSL error at position " + std::to_string(pos_) + ": " + msg);
    }

    void ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n'))
            ++pos_;
    }

    bool eat(const std::string& tok) {
        ws();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& tok) {
        if (!eat(tok)) fail("expected '" + tok + "'");
    }

    double number() {
        ws();
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) fail("expected a number");
        pos_ += std::size_t(end - begin);
        return v;
    }

    long integer() {
        ws();
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        long v = std::strtol(begin, &end, 10);
        if (end == begin) fail("expected an integer");
        pos_ += std::size_t(end - begin);
        return v;
    }

    std::vector<double> number_list() {
        expect("[");
        std::vector<double> out{number()};
        while (eat(",")) out.push_back(number());
        expect("]");
        return out;
    }

    RationalIntrinsic rational() {
        if (eat("poly:")) {
            std::vector<double> num = number_list();
            if (eat("/")) return RationalIntrinsic::rational(std::move(num), number_list());
            return RationalIntrinsic::polynomial(std::move(num));
        }
        if (eat("reg:")) {
            long m = integer();
            if (m < 1 || m > 64) fail("regularizer order out of range");
            return regularizer(int(m));
        }
        fail("expected 'poly:' or 'reg:'");
    }

    CliffordNum clifford_literal() {
        expect("{");
        std::vector<std::pair<unsigned long, double>> entries;
        unsigned long all = 0;
        do {
            long mask = integer();
            if (mask < 0) fail("blade bitmask must be nonnegative");
            expect(":");
            entries.emplace_back((unsigned long)(mask), number());
            all |= (unsigned long)(mask);
        } while (eat(","));
        expect("}");
        int d = std::bit_width(all);
        CliffordNum c(d);
        for (auto [mask, v] : entries) c[BladeIndex(mask)] += v;
        return c;
    }

    SliceFunction coef_term(Chirality chi) {
        CliffordNum a = clifford_literal();
        RationalIntrinsic g = RationalIntrinsic::polynomial({1.0});
        if (eat("*(")) {
            g = rational();
            expect(")");
        }
        return SliceFunction(chi, {SliceFunction::Term{a, g}});
    }

    static Chirality combine(Chirality a, Chirality b, const Parser& p) {
        if (a == b) return a;
        if (a == Chirality::intrinsic) return b;
        if (b == Chirality::intrinsic) return a;
        p.fail("cannot sum left and right terms");
    }

    static CliffordNum promote(const CliffordNum& c, int d) {
        if (c.dim() == d) return c;
        CliffordNum out(d);
        for (std::size_t a = 0; a < c.size(); ++a) out[BladeIndex(a)] = c[BladeIndex(a)];
        return out;
    }

    SliceFunction sum() {
        expect("[");
        std::vector<SliceFunction> parts{expr()};
        while (eat(";")) parts.push_back(expr());
        expect("]");
        Chirality chi = Chirality::intrinsic;
        int d = 0;
        for (const auto& p : parts) {
            chi = combine(chi, p.chirality(), *this);
            d = std::max(d, p.d());
        }
        std::vector<SliceFunction::Term> terms;
        for (const auto& p : parts)
            for (const auto& t : p.terms()) terms.push_back({promote(t.coef, d), t.g});
        // A sum of intrinsic parts stays intrinsic only with real scalar
        // coefficients, which combine() already guarantees.
        return SliceFunction(chi, std::move(terms));
    }

    SliceFunction expr() {
        ws();
        if (eat("sum:")) return sum();
        if (eat("sharp:(")) {
            SliceFunction inner = expr();
            expect(")");
            return inner.sharp();
        }
        if (eat("coef-left:")) return coef_term(Chirality::left);
        if (eat("coef-right:")) return coef_term(Chirality::right);
        return SliceFunction::intrinsic(rational());
    }
};

} // namespace

SliceFunction parse_function(const std::string& text) { return Parser(text).parse(); }

} // namespace cliffspec
