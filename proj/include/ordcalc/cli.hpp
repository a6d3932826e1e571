#pragma once

#include <bit>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parse.hpp"

namespace ordcalc::cli {

enum ExitCode { kOk = 0, kSyntax = 2, kBudget = 3, kPrecondition = 4 };

struct FamilySpec {
    enum class Kind { Base, Q } kind = Kind::Base;
    FilterBaseSet base;
    PointSet a, b;  // Q
};

struct Command {
    std::string verb;
    std::vector<Ordinal> ords;
    std::vector<EuclidInt> eints;
    std::vector<PointSet> sets;
    std::vector<PartialSumExpr> exprs;
    std::optional<FinOrdSet> universe;
    std::optional<Ordinal> at;
    std::vector<FamilySpec> families;
    std::vector<std::string> sources;
    std::vector<std::vector<Integer>> source_values;
    bool encode = false;
};

struct Output {
    std::string text;
    nlohmann::ordered_json json;
    int exit_code = kOk;
};

/// Base-2 normal form with exponents in Cantor form, e.g. "2^(w + 1) + 2^0".
inline std::string nf_string(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& e : exponents(a)) {
        std::string s = to_string(e);
        if (!out.empty()) out += " + ";
        out += s.find_first_of(" ^*") == std::string::npos ? "2^" + s : "2^(" + s + ")";
    }
    return out;
}

namespace detail {

inline const std::vector<std::string>& verbs() {
    static const std::vector<std::string> v{"ord",   "nf",      "cmp",  "num",       "count", "code",
                                            "chain", "realize", "diff", "partition", "fip",   "eval"};
    return v;
}

template <class F>
bool try_parse(Parser& p, F&& f) {
    std::size_t at = p.pos();
    try {
        f();
        return true;
    } catch (const SyntaxError&) {
        p.reset(at);
        return false;
    }
}

inline void parse_source(Parser& p, Command& c) {
    std::string name = p.word();
    std::vector<Integer> values;
    if (name == "list") {
        p.expect("(");
        do {
            bool neg = p.accept("-");
            Integer v = p.nat();
            values.push_back(neg ? Integer(-v) : v);
        } while (p.accept(","));
        p.expect(")");
    } else if (name != "card" && name != "const" && name != "rev" && name != "parity" && name != "code") {
        p.fail("a psi source (card, const, rev, parity, code, list(...))");
    }
    c.sources.push_back(name);
    c.source_values.push_back(std::move(values));
}

inline FamilySpec parse_family(Parser& p) {
    FamilySpec f;
    if (p.accept("C(")) {
        f.base = FilterBaseSet::cone(p.ord());
        p.expect(")");
    } else if (p.accept("D(")) {
        Ordinal eta = p.ord();
        if (p.accept(",")) {
            Ordinal theta = p.ord();
            f.base = FilterBaseSet::dcone(eta, theta);
        } else {
            f.base = FilterBaseSet::d(eta);
        }
        p.expect(")");
    } else if (p.accept("Q(")) {
        f.kind = FamilySpec::Kind::Q;
        f.a = p.set();
        p.expect(",");
        f.b = p.set();
        p.expect(")");
    } else {
        p.fail("a family C(..), D(..) or Q(..)");
    }
    return f;
}

}  // namespace detail

/// Parses "verb arguments".
inline Command parse_command(const std::string& line, const Universe& u = Universe{}) {
    Parser p(line, u);
    Command c;
    c.verb = p.word();
    const auto& vs = detail::verbs();
    if (std::find(vs.begin(), vs.end(), c.verb) == vs.end()) {
        p.reset(0);
        p.fail("a verb (ord, nf, cmp, num, count, code, chain, realize, diff, partition, fip, eval)");
    }
    const std::string& v = c.verb;
    if (v == "ord" || v == "nf") {
        c.ords.push_back(p.ord());
    } else if (v == "code") {
        if (p.rest().starts_with("{")) {
            c.encode = true;
            c.universe = p.finset();
        } else {
            c.ords.push_back(p.ord());
        }
    } else if (v == "cmp") {
        bool done = detail::try_parse(p, [&] {
            EuclidInt a = p.eint();
            EuclidInt b = p.eint();
            p.expect_end();
            c.eints = {a, b};
        });
        if (!done)
            done = detail::try_parse(p, [&] {
                Ordinal a = p.ord();
                Ordinal b = p.ord();
                p.expect_end();
                c.ords = {a, b};
            });
        if (!done) {
            c.exprs.push_back(p.pexpr());
            c.exprs.push_back(p.pexpr());
        }
    } else if (v == "num") {
        c.sets.push_back(p.set());
    } else if (v == "count") {
        c.sets.push_back(p.set());
        if (!p.accept_word("at")) p.fail("'at'");
        c.at = p.code_or_ord();
    } else if (v == "chain") {
        c.universe = p.finset();
    } else if (v == "realize") {
        c.eints.push_back(p.eint());
    } else if (v == "diff") {
        c.sets.push_back(p.set());
        c.sets.push_back(p.set());
    } else if (v == "partition") {
        detail::parse_source(p, c);
        while (p.accept_word("x")) detail::parse_source(p, c);
        if (!p.accept_word("on")) p.fail("'on'");
        c.universe = p.finset();
    } else if (v == "fip") {
        do c.families.push_back(detail::parse_family(p));
        while (!p.at_end() && !p.rest().starts_with("in"));
        if (p.accept_word("in")) c.universe = p.finset();
    } else if (v == "eval") {
        c.exprs.push_back(p.pexpr());
        if (!p.accept_word("at")) p.fail("'at'");
        c.at = p.code_or_ord();
    }
    p.expect_end();
    return c;
}

namespace detail {

inline std::vector<Integer> source_psi(const std::string& name, const std::vector<Integer>& values, std::size_t n) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<Integer> psi(size);
    if (name == "list") {
        if (values.size() != size)
            throw PreconditionError("list needs " + std::to_string(size) + " values, one per code");
        return values;
    }
    for (std::size_t m = 0; m < size; ++m) {
        int card = std::popcount(m);
        if (name == "card") psi[m] = card;
        else if (name == "rev") psi[m] = static_cast<int>(n) - card;
        else if (name == "parity") psi[m] = card % 2;
        else if (name == "code") psi[m] = static_cast<unsigned long long>(m);
    }
    return psi;
}

/// Limit parts of the keys and interval endpoints met in the expression.
inline void collect_limits(const PartialSumExpr& e, std::vector<Ordinal>& out) {
    using K = PartialSumExpr::Kind;
    auto add = [&](const Ordinal& a) {
        for (const auto& x : exponents(a)) out.push_back(limit_split(x).first);
    };
    switch (e.kind()) {
        case K::Const: return;
        case K::Euclid:
            for (const auto& [k, v] : e.eint().coeffs()) out.push_back(k);
            return;
        case K::CountIn:
            for (const auto& [n, boxes] : e.set().dims())
                for (const auto& b : boxes)
                    for (const auto& i : b) {
                        add(i.lo);
                        add(i.hi);
                    }
            return;
        case K::Pow2: collect_limits(e.lhs(), out); return;
        default:
            collect_limits(e.lhs(), out);
            collect_limits(e.rhs(), out);
    }
}

/// Three cofinal chains through lambda + j (j < 10) over the limit parts met in either
/// expression. Each step adds the next offset of one block, cycling through the blocks; the
/// chains differ in block order and in the order of the offsets.
inline std::vector<std::vector<Ordinal>> sample_chains(const PartialSumExpr& a, const PartialSumExpr& b,
                                                       const Universe& u) {
    constexpr std::uint64_t kOffsets = 10;
    std::vector<Ordinal> lims{Ordinal()};
    collect_limits(a, lims);
    collect_limits(b, lims);
    std::sort(lims.begin(), lims.end());
    lims.erase(std::unique(lims.begin(), lims.end()), lims.end());
    std::vector<Ordinal> rev(lims.rbegin(), lims.rend());
    std::vector<std::uint64_t> plain, evens_first;
    for (std::uint64_t j = 0; j < kOffsets; ++j) plain.push_back(j);
    for (std::uint64_t j = 0; j < kOffsets; j += 2) evens_first.push_back(j);
    for (std::uint64_t j = 1; j < kOffsets; j += 2) evens_first.push_back(j);
    std::vector<std::vector<Ordinal>> chains;
    for (auto [blocks, offsets] : {std::pair{&lims, &plain}, std::pair{&rev, &plain}, std::pair{&lims, &evens_first}}) {
        std::vector<Ordinal> chain{Ordinal()};
        for (std::uint64_t j : *offsets)
            for (const auto& l : *blocks) chain.push_back(nat_sum(chain.back(), pow2(ord_sum(l, Ordinal(j)), u)));
        chains.push_back(std::move(chain));
    }
    return chains;
}

inline FinOrdSet default_fip_universe(const std::vector<FamilySpec>& fams) {
    std::vector<FilterBaseSet> bases;
    for (const auto& f : fams)
        if (f.kind == FamilySpec::Kind::Base) bases.push_back(f.base);
    std::vector<Ordinal> es = exponents(fip_construct(bases));
    for (std::uint64_t j = 0; j < 8; ++j) es.push_back(Ordinal(j));
    return FinOrdSet(std::move(es));
}

}  // namespace detail

/// Executes a parsed command. Engine errors propagate as exceptions.
inline Output execute(const Command& c, const Universe& u = Universe{}) {
    Output out;
    auto& j = out.json;
    j["verb"] = c.verb;
    std::string quality = "exact";
    std::optional<std::string> witness;
    const std::string& v = c.verb;
    if (v == "ord") {
        out.text = to_string(c.ords[0]);
    } else if (v == "nf") {
        out.text = nf_string(c.ords[0]);
    } else if (v == "code") {
        out.text = c.encode ? to_string(encode(*c.universe, u)) : to_string(decode(c.ords[0]));
    } else if (v == "cmp") {
        if (!c.exprs.empty()) {
            auto chains = detail::sample_chains(c.exprs[0], c.exprs[1], u);
            Verdict r = expr_compare_sampled(c.exprs[0], c.exprs[1], chains, u);
            quality = "heuristic";
            out.text = std::string(to_string(r)) + " (heuristic)";
            j["result"] = to_string(r);
        } else {
            Comparison r = c.eints.empty() ? compare(psi(c.ords[0]), psi(c.ords[1]), u)
                                           : compare(c.eints[0], c.eints[1], u);
            witness = to_string(r.witness);
            out.text = std::string(to_string(r.result)) + ", witness θ=" + *witness;
            j["result"] = to_string(r.result);
        }
    } else if (v == "num") {
        out.text = to_string(num(c.sets[0]));
    } else if (v == "count") {
        out.text = to_string(partial_count(c.sets[0], *c.at, u));
    } else if (v == "chain") {
        for (const auto& d : cofinal_chain(*c.universe, u))
            out.text += (out.text.empty() ? "" : "\n") + to_string(d) + "  " + to_string(decode(d));
    } else if (v == "realize") {
        out.text = to_string(realize(c.eints[0], u));
    } else if (v == "diff") {
        out.text = to_string(diff_witness(c.sets[0], c.sets[1], u));
    } else if (v == "partition") {
        const FinOrdSet& e = *c.universe;
        check_enumeration(e.size(), u);
        std::vector<Partition2> parts;
        for (std::size_t i = 0; i < c.sources.size(); ++i)
            parts.push_back(g_psi(detail::source_psi(c.sources[i], c.source_values[i], e.size()), e, u));
        Partition2 g = parts.size() == 1 ? parts[0] : product_partition(parts, u);
        auto h = homogeneous_search(g);
        std::string src;
        for (const auto& s : c.sources) src += (src.empty() ? "" : " x ") + s;
        std::string verdict = h.found ? "cofinal 1-homogeneous set (at scale E)" : "0-chain through E (at scale E)";
        witness = h.found ? "{" + to_string(h.set, ", ") + "}" : to_string(h.chain, " < ");
        out.text = "universe: " + to_string(e) + "\nsource: G_psi, psi = " + src + "\nverdict: " + verdict +
                   "\nwitness: " + *witness;
        j["result"] = h.found ? "homogeneous" : "zero-chain";
    } else if (v == "fip") {
        FinOrdSet e = c.universe ? *c.universe : detail::default_fip_universe(c.families);
        std::vector<Family> fams;
        for (const auto& f : c.families) {
            if (f.kind == FamilySpec::Kind::Q)
                fams.push_back([&f, u](const Ordinal& d) { return q_member(f.a, f.b, d, u); });
            else
                fams.push_back([&f](const Ordinal& d) { return in_filter_base(f.base, d); });
        }
        auto d = fip_check(fams, e, u);
        if (d) {
            witness = to_string(*d);
            out.text = "common element " + *witness;
            j["result"] = "found";
        } else {
            out.text = "none in universe " + to_string(e) + " (inconclusive at scale)";
            j["result"] = "inconclusive";
        }
    } else if (v == "eval") {
        out.text = to_string(expr_eval(c.exprs[0], *c.at, u));
    }
    if (!j.contains("result")) j["result"] = out.text;
    if (witness) j["witness"] = *witness;
    j["verdict_quality"] = quality;
    return out;
}

/// Parses and executes one line; errors become exit codes with a message in text.
inline Output run(const std::string& line, const Universe& u = Universe{}) {
    Output out;
    try {
        return execute(parse_command(line, u), u);
    } catch (const SyntaxError& e) {
        out.exit_code = kSyntax;
        out.text = std::string("syntax error ") + e.what();
    } catch (const BudgetError& e) {
        out.exit_code = kBudget;
        out.text = std::string("budget exceeded: ") + e.what();
    } catch (const PreconditionError& e) {
        out.exit_code = kPrecondition;
        out.text = std::string("precondition violated: ") + e.what();
    }
    return out;
}

/// Universe limits from ORDCALC_BUDGET (elementary steps, default 2^24).
inline Universe universe_from_env() {
    Universe u;
    if (const char* b = std::getenv("ORDCALC_BUDGET"); b && *b) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(b, &end, 10);
        if (end && *end == '\0' && n > 0) u.work_budget = n;
    }
    return u;
}

}  // namespace ordcalc::cli
