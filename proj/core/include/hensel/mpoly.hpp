#pragma once

#include "hensel/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hensel {

/// Exponent vector of a monomial in a fixed number of variables.
struct Mono {
    std::vector<unsigned> e;

    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned k : e) d += k;
        return d;
    }

    bool divides(const Mono& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Mono quotient(const Mono& m) const {  // this / m, assuming m divides this
        Mono q = *this;
        for (size_t i = 0; i < e.size(); ++i) q.e[i] -= m.e[i];
        return q;
    }

    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }

    static Mono lcm(const Mono& a, const Mono& b) {
        Mono r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    static Mono unit(size_t nvars) { return Mono{std::vector<unsigned>(nvars, 0)}; }

    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
};

/// Graded lexicographic order, descending, so std::map::begin() is the
/// leading term. Ties in total degree break lexicographically on exponents.
struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        const unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

/// Sparse multivariate polynomial over a coefficient field C, ordered by
/// grlex. The variable count is fixed per element; mixing counts is a bug and
/// throws. Zero coefficients are never stored.
template <class C>
class MPoly {
public:
    using TermMap = std::map<Mono, C, GrlexGreater>;

    explicit MPoly(size_t nvars) : nvars_(nvars) {}

    static MPoly constant(size_t nvars, C v) {
        MPoly p(nvars);
        if (!is_zero_elem(v)) p.terms_.emplace(Mono::unit(nvars), std::move(v));
        return p;
    }

    static MPoly variable(size_t nvars, size_t idx, const C& one) {
        if (idx >= nvars) throw std::invalid_argument("MPoly::variable: index out of range");
        Mono m = Mono::unit(nvars);
        m.e[idx] = 1;
        MPoly p(nvars);
        p.terms_.emplace(std::move(m), one);
        return p;
    }

    static MPoly term(size_t nvars, Mono m, C v) {
        if (m.e.size() != nvars) throw std::invalid_argument("MPoly::term: arity mismatch");
        MPoly p(nvars);
        if (!is_zero_elem(v)) p.terms_.emplace(std::move(m), std::move(v));
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int total_degree() const {
        if (terms_.empty()) return -1;
        return static_cast<int>(terms_.begin()->first.total_degree());
    }

    const Mono& lead_mono() const {
        if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
        return terms_.begin()->first;
    }
    const C& lead_coeff() const {
        if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
        return terms_.begin()->second;
    }

    /// True iff the polynomial is the constant 1 (avoids needing an exemplar).
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.total_degree() == 0 &&
               terms_.begin()->second == one_like(terms_.begin()->second);
    }

    void add_term(const Mono& m, const C& v) {
        if (is_zero_elem(v)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, v);
            return;
        }
        it->second = it->second + v;
        if (is_zero_elem(it->second)) terms_.erase(it);
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_arity(b);
        MPoly r = a;
        for (const auto& [m, v] : b.terms_) r.add_term(m, v);
        return r;
    }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, zero_like(v) - v);
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_arity(b);
        MPoly r(a.nvars_);
        for (const auto& [ma, va] : a.terms_)
            for (const auto& [mb, vb] : b.terms_) r.add_term(ma * mb, va * vb);
        return r;
    }

    friend MPoly operator*(const C& s, const MPoly& a) {
        MPoly r(a.nvars_);
        if (is_zero_elem(s)) return r;
        for (const auto& [m, v] : a.terms_) r.add_term(m, s * v);
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

private:
    void check_arity(const MPoly& other) const {
        if (nvars_ != other.nvars_) throw std::logic_error("MPoly: variable count mismatch");
    }

    size_t nvars_;
    TermMap terms_;
};

template <class C>
bool is_zero_elem(const MPoly<C>& p) {
    return p.is_zero();
}
template <class C>
MPoly<C> zero_like(const MPoly<C>& p) {
    return MPoly<C>(p.nvars());
}
template <class C>
MPoly<C> one_like(const MPoly<C>& p) {
    if (p.is_zero()) throw std::logic_error("one_like(MPoly): no coefficient exemplar");
    return MPoly<C>::constant(p.nvars(), one_like(p.terms().begin()->second));
}
template <class C>
MPoly<C> from_int_like(const MPoly<C>& p, long long v) {
    if (p.is_zero()) {
        if (v == 0) return MPoly<C>(p.nvars());
        throw std::logic_error("from_int_like(MPoly): no coefficient exemplar");
    }
    return MPoly<C>::constant(p.nvars(), from_int_like(p.terms().begin()->second, v));
}

// ---------------------------------------------------------------------------
// Text form. The grammar accepted by parse_mpoly:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | variable ['^' uint] | '(' expr ')' ['^' uint]
//   number := uint ['/' uint]
//
// Whitespace is insignificant. Variables must come from the supplied list.
// ---------------------------------------------------------------------------

namespace detail {

template <class C>
class MPolyParser {
public:
    MPolyParser(const std::string& text, const std::vector<std::string>& vars, const C& one)
        : s_(text), vars_(vars), one_(one) {}

    MPoly<C> run() {
        MPoly<C> p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "polynomial parse error at position " << pos_ << ": " << what << " in \"" << s_
           << "\"";
        throw std::invalid_argument(os.str());
    }

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

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    unsigned long long parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a number");
        unsigned long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > ((1ull << 62) - 9) / 10) fail("number literal too large");
            v = v * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    MPoly<C> parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MPoly<C> acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    MPoly<C> parse_term() {
        MPoly<C> acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    MPoly<C> parse_factor() {
        const size_t nv = vars_.size();
        char c = peek();
        if (c == '(') {
            eat('(');
            MPoly<C> inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return maybe_power(std::move(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long long num = parse_uint();
            C v = from_int_like(one_, static_cast<long long>(num));
            if (eat('/')) {
                unsigned long long den = parse_uint();
                if (den == 0) fail("zero denominator");
                v = v / from_int_like(one_, static_cast<long long>(den));
            }
            return MPoly<C>::constant(nv, std::move(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                name.push_back(s_[pos_]);
                ++pos_;
            }
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) fail("unknown variable '" + name + "'");
            const size_t idx = static_cast<size_t>(it - vars_.begin());
            return maybe_power(MPoly<C>::variable(nv, idx, one_));
        }
        fail("expected a factor");
    }

    MPoly<C> maybe_power(MPoly<C> base) {
        if (!eat('^')) return base;
        unsigned long long e = parse_uint();
        if (e > 4096) fail("exponent too large");
        return ring_pow(std::move(base), e, MPoly<C>::constant(vars_.size(), one_));
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    const C& one_;
    size_t pos_ = 0;
};

}  // namespace detail

template <class C>
MPoly<C> parse_mpoly(const std::string& text, const std::vector<std::string>& vars,
                     const C& one) {
    return detail::MPolyParser<C>(text, vars, one).run();
}

/// Canonical display: terms in descending grlex, " + " / " - " separators,
/// unit coefficients omitted next to variables, e.g. "u^2*w - 3*u + 1/2".
template <class C>
std::string mpoly_str(const MPoly<C>& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : p.terms()) {
        C mag = v;
        if (elem_is_negative(v)) {
            os << (first ? "-" : " - ");
            mag = zero_like(v) - v;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        std::string monos;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += vars[i];
            if (m.e[i] > 1) monos += "^" + std::to_string(m.e[i]);
        }
        const bool unit_coeff = mag == one_like(mag);
        if (monos.empty()) {
            os << elem_str(mag);
        } else if (unit_coeff) {
            os << monos;
        } else {
            os << elem_str(mag) << "*" << monos;
        }
    }
    return os.str();
}

}  // namespace hensel
