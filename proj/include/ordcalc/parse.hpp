#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"
#include "psexpr.hpp"

namespace ordcalc {

/// Recursive-descent reader for the ordinal, Euclidean-integer, point-set and
/// partial-sum expression grammars over one input string.
///
///   ord  := oterm (("+" | "(+)") oterm)*
///   oterm:= ofact (("*" | "(x)") ofact)*
///   ofact:= NAT | "w" ["^" oatom] | "2^(" ord ")" | "(" ord ")"
///   eint := ["-"] eterm (("+" | "-") eterm)*
///   eterm:= INT ["*P(" ord ")"] | "P(" ord ")"
///   set  := sterm (("|" | "&" | "\") sterm)*
///   sterm:= sfact ("><" sfact)*
///   sfact:= "[" ord "," ord ")" | "{" [elem ("," elem)*] "}" | "(" set ")"
///   pexpr:= pterm (("+" | "-") pterm)*,  pterm := pfact ("*" pfact)*
///   pfact:= INT | "P(" ord ")" | "#(" set ")" | "2^(" pexpr ")" | "pow(" pexpr "," pexpr ")"
///         | "finset(" set ")" | "finmap(" set "," set ")" | "(" pexpr ")" | "-" pfact
class Parser {
public:
    explicit Parser(std::string_view text, Universe u = Universe{}) : s_(text), u_(u) {}

    std::size_t pos() const noexcept { return pos_; }
    void reset(std::size_t p) noexcept { pos_ = p; }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    void expect_end() {
        if (!at_end()) fail("end of input");
    }
    std::string_view rest() {
        skip_ws();
        return s_.substr(pos_);
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(pos_, "expected " + expected);
    }

    /// Consumes lit (after whitespace) if present.
    bool accept(std::string_view lit) {
        skip_ws();
        if (s_.substr(pos_, lit.size()) != lit) return false;
        pos_ += lit.size();
        return true;
    }
    void expect(std::string_view lit) {
        if (!accept(lit)) fail("'" + std::string(lit) + "'");
    }
    /// Consumes a bare word (letters, digits, '-', '_') if it equals w.
    bool accept_word(std::string_view w) {
        skip_ws();
        std::size_t p = pos_;
        if (s_.substr(p, w.size()) != w) return false;
        std::size_t q = p + w.size();
        if (q < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[q])) || s_[q] == '_')) return false;
        pos_ = q;
        return true;
    }
    std::string word() {
        skip_ws();
        std::size_t p = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
            ++pos_;
        if (p == pos_) fail("a word");
        return std::string(s_.substr(p, pos_ - p));
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    Integer nat() {
        if (!peek_digit()) fail("a natural number");
        std::size_t p = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Integer(std::string(s_.substr(p, pos_ - p)));
    }

    Ordinal ord() {
        Ordinal a = oterm();
        while (true) {
            if (accept("(+)"))
                a = nat_sum(a, oterm());
            else if (peek_plain('+'))
                a = ord_sum(a, oterm());
            else
                return a;
        }
    }

    EuclidInt eint() {
        bool negative = accept("-");
        EuclidInt z = eterm();
        if (negative) z = -z;
        while (true) {
            if (accept("+"))
                z += eterm();
            else if (accept("-"))
                z -= eterm();
            else
                return z;
        }
    }

    PointSet set() {
        PointSet a = sterm();
        while (true) {
            if (accept("|"))
                a = unite(a, sterm(), u_);
            else if (accept("&"))
                a = intersect(a, sterm(), u_);
            else if (accept("\\"))
                a = difference(a, sterm(), u_);
            else
                return a;
        }
    }

    PartialSumExpr pexpr() {
        PartialSumExpr e = pterm();
        while (true) {
            if (accept("+"))
                e = e + pterm();
            else if (accept("-"))
                e = e - pterm();
            else
                return e;
        }
    }

    /// "{a, b, ...}" of ordinals.
    FinOrdSet finset() {
        expect("{");
        std::vector<Ordinal> xs;
        if (!accept("}")) {
            do xs.push_back(ord());
            while (accept(","));
            expect("}");
        }
        return FinOrdSet(std::move(xs));
    }

    /// "{...}" is read as the code of that finite set, anything else as an ordinal.
    Ordinal code_or_ord() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '{') return encode(finset(), u_);
        return ord();
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    /// c not starting one of the parenthesized natural operators.
    bool peek_plain(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) return false;
        ++pos_;
        return true;
    }

    bool at_natural_op() {
        skip_ws();
        auto t = s_.substr(pos_, 3);
        return t == "(+)" || t == "(x)";
    }

    Ordinal oterm() {
        Ordinal a = ofact();
        while (true) {
            if (accept("(x)"))
                a = nat_prod(a, ofact());
            else if (peek_plain('*'))
                a = ord_mul(a, ofact());
            else
                return a;
        }
    }

    Ordinal oatom() {
        if (peek_digit()) return Ordinal::from_integer(nat());
        if (accept_word("w")) return Ordinal::omega();
        if (!at_natural_op() && accept("(")) {
            Ordinal a = ord();
            expect(")");
            return a;
        }
        fail("an ordinal");
    }

    Ordinal ofact() {
        skip_ws();
        std::size_t start = pos_;
        Ordinal a;
        if (accept("2^(")) {
            Ordinal e = ord();
            expect(")");
            a = pow2(e, u_);
        } else if (accept_word("w")) {
            if (accept("^")) {
                Ordinal e = oatom();
                std::vector<Ordinal::Term> t;
                t.push_back(Ordinal::Term{std::move(e), 1});
                a = Ordinal::from_cnf(std::move(t));
            } else {
                a = Ordinal::omega();
            }
        } else {
            a = oatom();
        }
        try {
            check_depth(a, u_);
        } catch (const BudgetError&) {
            pos_ = start;
            throw;
        }
        return a;
    }

    EuclidInt eterm() {
        if (accept("P(")) return pterm_p(1);
        Integer c = nat();
        if (accept("*")) {
            expect("P(");
            return pterm_p(c);
        }
        return EuclidInt(c);
    }

    EuclidInt pterm_p(const Integer& c) {
        Ordinal theta = ord();
        expect(")");
        return EuclidInt::monomial(theta, c, u_);
    }

    PointSet sterm() {
        PointSet a = sfact();
        while (accept("><")) a = product(a, sfact(), u_);
        return a;
    }

    PointSet sfact() {
        if (accept("[")) {
            Ordinal lo = ord();
            expect(",");
            Ordinal hi = ord();
            expect(")");
            if (compare(lo, hi) != Cmp::LT) throw PreconditionError("interval needs lo < hi");
            return PointSet::interval(lo, hi);
        }
        if (accept("{")) {
            std::vector<Tuple> ts;
            if (!accept("}")) {
                do ts.push_back(element());
                while (accept(","));
                expect("}");
            }
            if (!ts.empty()) {
                for (const auto& t : ts)
                    if (t.size() != ts.front().size()) throw PreconditionError("tuples of mixed length in one literal");
            }
            return PointSet::tuples(ts);
        }
        if (accept("(")) {
            PointSet a = set();
            expect(")");
            return a;
        }
        fail("a set");
    }

    Tuple element() {
        skip_ws();
        std::size_t p = pos_;
        if (!at_natural_op() && accept("(")) {
            try {
                Tuple t{ord()};
                if (accept(",")) {
                    do t.push_back(ord());
                    while (accept(","));
                    expect(")");
                    return t;
                }
            } catch (const SyntaxError&) {
            }
            pos_ = p;
        }
        return {ord()};
    }

    PartialSumExpr pterm() {
        PartialSumExpr e = pfact();
        while (accept("*")) e = e * pfact();
        return e;
    }

    PartialSumExpr pfact() {
        if (accept("-")) return PartialSumExpr::constant(0) - pfact();
        if (accept("2^(")) {
            PartialSumExpr e = pexpr();
            expect(")");
            return PartialSumExpr::pow2(std::move(e));
        }
        if (peek_digit()) return PartialSumExpr::constant(nat());
        if (accept("P(")) return PartialSumExpr::euclid(pterm_p(1));
        if (accept("#(")) {
            PointSet x = set();
            expect(")");
            return PartialSumExpr::count_in(std::move(x));
        }
        if (accept("pow(")) {
            PartialSumExpr b = pexpr();
            expect(",");
            PartialSumExpr e = pexpr();
            expect(")");
            return PartialSumExpr::pow_base(std::move(b), std::move(e));
        }
        if (accept("finset(")) {
            PointSet x = set();
            expect(")");
            return finset_num(x);
        }
        if (accept("finmap(")) {
            PointSet x = set();
            expect(",");
            PointSet y = set();
            expect(")");
            return finmap_num(x, y);
        }
        if (accept("(")) {
            PartialSumExpr e = pexpr();
            expect(")");
            return e;
        }
        fail("a partial-sum expression");
    }

    std::string_view s_;
    Universe u_;
    std::size_t pos_ = 0;
};

}  // namespace ordcalc
