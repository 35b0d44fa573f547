#include "wedgent/ket.hpp"

#include "wedgent/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <map>

namespace wedgent {

namespace mp = boost::multiprecision;

bool KetExpr::operator==(const KetExpr& other) const
{
    return kind == other.kind && text == other.text && denominator == other.denominator &&
           indices == other.indices && children == other.children && arity == other.arity;
}

namespace {

using Kind = KetExpr::Kind;

KetExpr make_node(Kind kind, std::size_t column)
{
    KetExpr e;
    e.kind = kind;
    e.column = column;
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    KetExpr parse()
    {
        KetExpr e = parse_expr();
        skip_ws();
        if (pos_ < text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message, ErrorCode code = ErrorCode::SyntaxError) const
    {
        throw SyntaxError(code, pos_ + 1, message);
    }
    [[noreturn]] static void fail_at(std::size_t column, const std::string& message,
                                     ErrorCode code = ErrorCode::SyntaxError)
    {
        throw SyntaxError(code, column, message);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    bool at_keyword(std::string_view word)
    {
        skip_ws();
        return text_.substr(pos_, word.size()) == word;
    }

    bool starts_factor()
    {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'i' || c == '|' || c == '(' ||
               at_keyword("sqrt");
    }

    KetExpr parse_expr()
    {
        const std::size_t column = (skip_ws(), pos_ + 1);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        std::vector<KetExpr> terms;
        terms.push_back(signed_term(negate));
        while (true) {
            if (accept('+'))
                terms.push_back(signed_term(false));
            else if (accept('-'))
                terms.push_back(signed_term(true));
            else
                break;
        }
        if (terms.size() == 1)
            return std::move(terms.front());

        KetExpr sum = make_node(Kind::Sum, column);
        sum.arity = terms.front().arity;
        for (const auto& t : terms)
            if (t.arity != sum.arity)
                fail_at(t.column,
                        "term has " + std::to_string(t.arity) + " ket slots, expected " + std::to_string(sum.arity),
                        ErrorCode::ArityMismatch);
        sum.children = std::move(terms);
        return sum;
    }

    KetExpr signed_term(bool negate)
    {
        const std::size_t column = (skip_ws(), pos_ + 1);
        KetExpr t = parse_term();
        if (!negate)
            return t;
        KetExpr neg = make_node(Kind::Neg, column);
        neg.arity = t.arity;
        neg.children.push_back(std::move(t));
        return neg;
    }

    KetExpr parse_term()
    {
        KetExpr lhs = parse_factor();
        while (starts_factor()) {
            KetExpr rhs = parse_factor();
            KetExpr prod = make_node(Kind::Product, lhs.column);
            prod.arity = lhs.arity + rhs.arity;
            prod.children.push_back(std::move(lhs));
            prod.children.push_back(std::move(rhs));
            lhs = std::move(prod);
        }
        return lhs;
    }

    KetExpr parse_factor()
    {
        KetExpr lhs = parse_atom();
        while (accept('/')) {
            KetExpr rhs = parse_atom();
            if (rhs.arity != 0)
                fail_at(rhs.column, "divisor must not contain kets");
            KetExpr q = make_node(Kind::Quotient, lhs.column);
            q.arity = lhs.arity;
            q.children.push_back(std::move(lhs));
            q.children.push_back(std::move(rhs));
            lhs = std::move(q);
        }
        return lhs;
    }

    std::string parse_number_literal()
    {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            ++digits;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++digits;
            }
        }
        if (digits == 0) {
            pos_ = start;
            fail("expected a number");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t parse_index()
    {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (value > kMaxStateSize)
                fail_at(start + 1, "ket index too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected a ket index");
        return value;
    }

    KetExpr parse_atom()
    {
        const char c = peek();
        const std::size_t column = pos_ + 1;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            KetExpr n = make_node(Kind::Number, column);
            n.text = parse_number_literal();
            return n;
        }
        if (at_keyword("sqrt")) {
            pos_ += 4;
            expect('(');
            KetExpr s = make_node(Kind::Sqrt, column);
            s.text = parse_number_literal();
            if (accept('/'))
                s.denominator = parse_number_literal();
            expect(')');
            return s;
        }
        if (c == 'i') {
            ++pos_;
            return make_node(Kind::Imag, column);
        }
        if (c == '|') {
            ++pos_;
            KetExpr k = make_node(Kind::Ket, column);
            k.indices.push_back(parse_index());
            while (accept(','))
                k.indices.push_back(parse_index());
            expect('>');
            k.arity = k.indices.size();
            return k;
        }
        if (c == '(') {
            ++pos_;
            KetExpr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (c == '\0')
            fail("unexpected end of expression");
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

// --- printing ---------------------------------------------------------------

std::string print_expr(const KetExpr& e);
std::string print_term(const KetExpr& e);

std::string parens(const KetExpr& e)
{
    return "(" + print_expr(e) + ")";
}

std::string print_atom(const KetExpr& e)
{
    switch (e.kind) {
    case Kind::Number: return e.text;
    case Kind::Imag: return "i";
    case Kind::Sqrt: return "sqrt(" + e.text + (e.denominator.empty() ? "" : "/" + e.denominator) + ")";
    case Kind::Ket: {
        std::string s = "|";
        for (std::size_t i = 0; i < e.indices.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(e.indices[i]);
        }
        return s + ">";
    }
    default: return parens(e);
    }
}

std::string print_factor(const KetExpr& e)
{
    if (e.kind != Kind::Quotient)
        return print_atom(e);
    const KetExpr& lhs = e.children[0];
    return (lhs.kind == Kind::Quotient ? print_factor(lhs) : print_atom(lhs)) + "/" + print_atom(e.children[1]);
}

std::string print_term(const KetExpr& e)
{
    if (e.kind != Kind::Product)
        return print_factor(e);
    const KetExpr& lhs = e.children[0];
    const KetExpr& rhs = e.children[1];
    return (lhs.kind == Kind::Product ? print_term(lhs) : print_factor(lhs)) + " " + print_factor(rhs);
}

std::string print_sum_child(const KetExpr& e)
{
    return e.kind == Kind::Sum ? parens(e) : print_term(e);
}

std::string print_expr(const KetExpr& e)
{
    if (e.kind == Kind::Neg)
        return "-" + print_sum_child(e.children[0]);
    if (e.kind != Kind::Sum)
        return print_term(e);
    std::string s;
    for (std::size_t i = 0; i < e.children.size(); ++i) {
        const KetExpr& c = e.children[i];
        if (c.kind == Kind::Neg)
            s += (i ? " - " : "-") + print_sum_child(c.children[0]);
        else
            s += (i ? " + " : "") + print_sum_child(c);
    }
    return s;
}

// --- exact evaluation -------------------------------------------------------

using mp::cpp_int;
using Rational = mp::cpp_rational;

struct GaussRational {
    Rational re, im;

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRational operator*(const GaussRational& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
};

// Finite sum of c_t sqrt(t) over squarefree t with Gaussian-rational c_t;
// closed under +, -, *.
class Surd {
public:
    Surd() = default;
    static Surd rational(Rational r) { return Surd(1, {std::move(r), 0}); }
    static Surd imag() { return Surd(1, {0, 1}); }
    Surd(cpp_int radicand, GaussRational c)
    {
        if (!c.is_zero())
            terms_.emplace(std::move(radicand), std::move(c));
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Surd& operator+=(const Surd& o)
    {
        for (const auto& [t, c] : o.terms_) {
            auto& mine = terms_[t];
            mine.re += c.re;
            mine.im += c.im;
            if (mine.is_zero())
                terms_.erase(t);
        }
        return *this;
    }
    Surd operator-() const
    {
        Surd out = *this;
        for (auto& [t, c] : out.terms_) {
            c.re = -c.re;
            c.im = -c.im;
        }
        return out;
    }
    Surd operator*(const Surd& o) const
    {
        Surd out;
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) {
                // sqrt(a) sqrt(b) = g sqrt((a/g)(b/g)), g = gcd(a, b), both squarefree
                const cpp_int g = mp::gcd(a, b);
                GaussRational c = ca * cb;
                c.re *= g;
                c.im *= g;
                out += Surd((a / g) * (b / g), std::move(c));
            }
        return out;
    }
    // Only single-term values are invertible here.
    std::optional<Surd> inverse() const
    {
        if (terms_.size() != 1)
            return std::nullopt;
        const auto& [t, c] = *terms_.begin();
        // 1/(c sqrt(t)) = conj(c) sqrt(t) / (|c|^2 t)
        const Rational scale = (c.re * c.re + c.im * c.im) * Rational(t);
        return Surd(t, {c.re / scale, -c.im / scale});
    }

    Complex to_complex() const
    {
        using Float = mp::cpp_bin_float_50;
        Float re = 0, im = 0;
        for (const auto& [t, c] : terms_) {
            const Float root = mp::sqrt(Float(t));
            re += Float(mp::numerator(c.re)) / Float(mp::denominator(c.re)) * root;
            im += Float(mp::numerator(c.im)) / Float(mp::denominator(c.im)) * root;
        }
        return {re.convert_to<double>(), im.convert_to<double>()};
    }

private:
    std::map<cpp_int, GaussRational> terms_;
};

Rational decimal_value(const std::string& literal)
{
    const auto dot = literal.find('.');
    if (dot == std::string::npos) {
        const auto first = literal.find_first_not_of('0');
        return first == std::string::npos ? Rational(0) : Rational(cpp_int(literal.substr(first)));
    }
    std::string digits = literal.substr(0, dot) + literal.substr(dot + 1);
    // cpp_int reads a leading 0 as an octal prefix
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    if (digits.empty())
        digits = "0";
    const auto scale = static_cast<unsigned>(literal.size() - dot - 1);
    return Rational(cpp_int(digits), mp::pow(cpp_int(10), scale));
}

// Largest radicand accepted by trial-division factoring.
const cpp_int kMaxRadicand = cpp_int(1000000000000ULL);

Surd sqrt_value(const KetExpr& e)
{
    Rational r = decimal_value(e.text);
    if (!e.denominator.empty()) {
        const Rational d = decimal_value(e.denominator);
        if (d == 0)
            throw SyntaxError(ErrorCode::SyntaxError, e.column, "division by zero in sqrt radicand");
        r /= d;
    }
    if (r == 0)
        return {};
    // sqrt(p/q) = sqrt(p q) / q
    const cpp_int p = mp::numerator(r), q = mp::denominator(r);
    const cpp_int pq = p * q;
    if (pq > kMaxRadicand)
        throw SyntaxError(ErrorCode::SyntaxError, e.column, "sqrt radicand too large");
    auto n = pq.convert_to<std::uint64_t>();
    std::uint64_t square_part = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % (d * d) == 0) {
            n /= d * d;
            square_part *= d;
        }
    return Surd(cpp_int(n), {Rational(cpp_int(square_part), q), 0});
}

using Terms = std::map<MultiIndex, Surd>;

void add_into(Terms& acc, const MultiIndex& key, const Surd& value)
{
    auto [it, inserted] = acc.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero())
            acc.erase(it);
    }
}

Terms eval_terms(const KetExpr& e)
{
    switch (e.kind) {
    case Kind::Number: return {{{}, Surd::rational(decimal_value(e.text))}};
    case Kind::Imag: return {{{}, Surd::imag()}};
    case Kind::Sqrt: return {{{}, sqrt_value(e)}};
    case Kind::Ket: return {{e.indices, Surd::rational(1)}};
    case Kind::Neg: {
        Terms out = eval_terms(e.children[0]);
        for (auto& [k, v] : out)
            v = -v;
        return out;
    }
    case Kind::Sum: {
        Terms out;
        for (const auto& c : e.children)
            for (const auto& [k, v] : eval_terms(c))
                add_into(out, k, v);
        return out;
    }
    case Kind::Product: {
        const Terms lhs = eval_terms(e.children[0]);
        const Terms rhs = eval_terms(e.children[1]);
        Terms out;
        for (const auto& [ka, va] : lhs)
            for (const auto& [kb, vb] : rhs) {
                MultiIndex key = ka;
                key.insert(key.end(), kb.begin(), kb.end());
                const Surd v = va * vb;
                if (!v.is_zero())
                    add_into(out, key, v);
            }
        return out;
    }
    case Kind::Quotient: {
        const Terms num = eval_terms(e.children[0]);
        const Terms den = eval_terms(e.children[1]);
        const KetExpr& divisor = e.children[1];
        if (den.empty())
            throw SyntaxError(ErrorCode::SyntaxError, divisor.column, "division by zero");
        const auto inv = den.begin()->second.inverse();
        if (!inv)
            throw SyntaxError(ErrorCode::SyntaxError, divisor.column,
                              "divisor must be a single term such as 2, sqrt(3) or 2i");
        Terms out;
        for (const auto& [k, v] : num)
            add_into(out, k, v * *inv);
        return out;
    }
    }
    return {};
}

} // namespace

KetExpr parse_ket(std::string_view text)
{
    return Parser(text).parse();
}

std::string to_string(const KetExpr& expr)
{
    return print_expr(expr);
}

PureState evaluate(const KetExpr& expr, const std::optional<Dims>& dims)
{
    if (expr.arity == 0)
        throw SyntaxError(ErrorCode::ArityMismatch, expr.column, "expression contains no kets");
    const Terms terms = eval_terms(expr);

    Dims shape;
    if (dims) {
        if (dims->size() != expr.arity)
            throw Error(ErrorCode::DimTooSmall, "expression has " + std::to_string(expr.arity) +
                                                    " subsystems, dims list has " + std::to_string(dims->size()));
        shape = *dims;
    } else {
        shape.assign(expr.arity, 1);
        for (const auto& [k, v] : terms)
            for (std::size_t j = 0; j < k.size(); ++j)
                shape[j] = std::max(shape[j], k[j] + 1);
    }
    for (const auto& [k, v] : terms)
        for (std::size_t j = 0; j < k.size(); ++j)
            if (k[j] >= shape[j])
                throw Error(ErrorCode::DimTooSmall, "index " + std::to_string(k[j]) + " in subsystem " +
                                                        std::to_string(j + 1) + " needs dimension > " +
                                                        std::to_string(shape[j]));

    const std::size_t total = total_dimension(shape);
    PureState zero(shape, std::vector<Complex>(total));
    std::vector<Complex> amps(total);
    for (const auto& [k, v] : terms)
        amps[zero.flat_index(k)] = v.to_complex();
    return PureState(std::move(shape), std::move(amps));
}

} // namespace wedgent
