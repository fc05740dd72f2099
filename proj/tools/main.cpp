// cutforge CLI: parse the field/cut script language, run classification,
// derivation, independence, hull and verification commands, and emit
// human-readable plus machine-readable reports.
//
// Exit codes:
//   0  all commands succeeded and every verify verdict is "pass"
//   1  a verify verdict other than "pass"
//   2  syntax error in the script or cut literal
//   3  unknown identifier or kind mismatch
//   4  a module precondition or fuel limit was hit

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutforge/catalog.hpp"
#include "cutforge/independence.hpp"
#include "cutforge/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cutforge;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Config {
    int fuel = kDefaultFuel;
    long max_degree = 6;
    long max_height = 12;
    std::size_t gens = 3;
    unsigned long seed = 0;
};

struct script_error : std::runtime_error {
    int line;
    script_error(int l, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

struct lookup_error : std::runtime_error {
    int line;
    lookup_error(int l, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

struct Session {
    Config cfg;
    std::map<std::string, TowerFieldPtr> fields;
    std::map<std::string, TowerElem> elems;
    std::map<std::string, CutSpec> cuts;
    std::map<std::string, CutFamily> families;
};

// ---------------------------------------------------------------------------
// expression parser: + - * / ^ over integers, generators tK and element
// bindings, with rational exponents in parentheses. Whitespace-free.

class ExprParser {
  public:
    ExprParser(const std::string& s, int line, const Session& ses)
        : s_(s), line_(line), ses_(ses) {}

    FragElem parse() {
        FragElem e = expr();
        if (pos_ != s_.size()) fail("trailing characters in expression");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw script_error(line_, msg + " at column " + std::to_string(pos_ + 1) + " of '" + s_ +
                                      "'");
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    FragElem expr() {
        FragElem e = term();
        while (peek() == '+' || peek() == '-') {
            char op = s_[pos_++];
            FragElem r = term();
            e = op == '+' ? e + r : e - r;
        }
        return e;
    }

    FragElem term() {
        FragElem e = factor();
        while (peek() == '*' || peek() == '/') {
            char op = s_[pos_++];
            FragElem r = factor();
            if (op == '/' && r.zero()) fail("division by zero");
            e = op == '*' ? e * r : e / r;
        }
        return e;
    }

    FragElem factor() {
        if (eat('-')) return FragElem(0).promoted(ses_.cfg.gens) - factor();
        FragElem base = atom();
        if (eat('^')) {
            if (!eat('(')) fail("expected '(' after '^'");
            Rat q = rational();
            if (!eat(')')) fail("expected ')' after exponent");
            base = frag_pow(base, q);
        }
        return base;
    }

    FragElem atom() {
        if (eat('(')) {
            FragElem e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            return FragElem(integer()).promoted(ses_.cfg.gens);
        }
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            std::string name = ident();
            if (name.size() >= 2 && name[0] == 't' &&
                name.find_first_not_of("0123456789", 1) == std::string::npos) {
                std::size_t k = std::stoul(name.substr(1));
                if (k < 1 || k > ses_.cfg.gens)
                    fail("generator " + name + " outside the ambient tower (--gens " +
                         std::to_string(ses_.cfg.gens) + ")");
                return FragElem::generator(ses_.cfg.gens, k - 1);
            }
            auto it = ses_.elems.find(name);
            if (it == ses_.elems.end())
                throw lookup_error(line_, "unknown element '" + name + "'");
            if (!it->second.is_frag())
                throw lookup_error(line_, "element '" + name + "' is not a fragment");
            return it->second.frag().promoted(ses_.cfg.gens);
        }
        fail("expected a number, generator or element name");
    }

    // a rational exponent: [-] int [/ int]
    Rat rational() {
        bool neg = eat('-');
        Rat num = integer();
        Rat den(1);
        if (eat('/')) den = integer();
        if (is_zero(den)) fail("zero exponent denominator");
        Rat q = num / den;
        return neg ? -q : q;
    }

    Rat integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
        return Rat(d);
    }

    std::string ident() {
        std::string d;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            d += s_[pos_++];
        return d;
    }

    FragElem frag_pow(const FragElem& base, const Rat& q) {
        // monomials take arbitrary rational powers; general fragments only
        // integer ones
        Rat num(q.get_num()), den(q.get_den());
        if (den == Rat(1)) {
            long e = q.get_num().get_si();
            if (e >= 0) return base.pow(e);
            FragElem p = base.pow(-e);
            if (p.zero()) fail("division by zero");
            return FragElem(1).promoted(ses_.cfg.gens) / p;
        }
        ExpVec v = base.val();
        FragElem mono = FragElem(Puiseux::monomial(ses_.cfg.gens, RealAlg(1), v));
        if (!(base == mono)) fail("rational exponents need a monomial base");
        ExpVec w(ses_.cfg.gens);
        for (std::size_t i = 0; i < v.size() && i < ses_.cfg.gens; ++i) w[i] = v[i] * q;
        return FragElem(Puiseux::monomial(ses_.cfg.gens, RealAlg(1), w));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
    const Session& ses_;
};

// ---------------------------------------------------------------------------
// statement helpers

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

// field literal: Q_rc(t1,t2) or Q_rc()
std::optional<TowerFieldPtr> parse_field_literal(const std::string& tok, int line,
                                                 const Session& ses) {
    if (tok.rfind("Q_rc(", 0) != 0 || tok.back() != ')') return std::nullopt;
    std::string inner = tok.substr(5, tok.size() - 6);
    std::vector<int> gens;
    std::istringstream is(inner);
    std::string g;
    while (std::getline(is, g, ',')) {
        if (g.size() < 2 || g[0] != 't' ||
            g.find_first_not_of("0123456789", 1) != std::string::npos)
            throw script_error(line, "bad generator '" + g + "' in field literal");
        std::size_t k = std::stoul(g.substr(1));
        if (k < 1 || k > ses.cfg.gens)
            throw script_error(line, "generator " + g + " outside the ambient tower");
        gens.push_back(static_cast<int>(k - 1));
    }
    return TowerField::with_gens(ses.cfg.gens, gens);
}

TowerFieldPtr resolve_field(const std::string& tok, int line, const Session& ses) {
    if (auto f = parse_field_literal(tok, line, ses)) return *f;
    auto it = ses.fields.find(tok);
    if (it == ses.fields.end()) throw lookup_error(line, "unknown field '" + tok + "'");
    return it->second;
}

FragElem eval_expr(const std::string& tok, int line, const Session& ses) {
    return ExprParser(tok, line, ses).parse();
}

// a cut literal: elem(E)|above(E)|below(E) over F, plus_infinity over F,
// minus_infinity over F, or catalog(name)
CutSpec parse_cut_literal(const std::vector<std::string>& toks, std::size_t at, int line,
                          Session& ses) {
    auto need_over = [&](std::size_t i) {
        if (at + i + 1 >= toks.size() || toks[at + i] != "over")
            throw script_error(line, "expected 'over <field>' in cut literal");
        return resolve_field(toks[at + i + 1], line, ses);
    };
    const std::string& head = toks[at];
    if (head == "plus_infinity") return CutSpec::plus_infinity(need_over(1));
    if (head == "minus_infinity") return CutSpec::minus_infinity(need_over(1));
    for (const char* kind : {"elem", "above", "below"}) {
        std::string pre = std::string(kind) + "(";
        if (head.rfind(pre, 0) != 0) continue;
        if (head.back() != ')') throw script_error(line, "expected ')' in cut literal");
        FragElem a = eval_expr(head.substr(pre.size(), head.size() - pre.size() - 1), line, ses);
        TowerFieldPtr K = need_over(1);
        if (head[0] == 'e') return CutSpec::element_induced(K, TowerElem(K, a));
        if (head[0] == 'a') return CutSpec::above_point(K, a);
        return CutSpec::below_point(K, a);
    }
    if (head.rfind("catalog(", 0) == 0 && head.back() == ')') {
        std::string name = head.substr(8, head.size() - 9);
        return catalog::find(catalog::standard_catalog(ses.cfg.gens), name).cut;
    }
    throw script_error(line, "unrecognized cut literal '" + head + "'");
}

// ---------------------------------------------------------------------------
// report rendering

json tag_json(const CofinalityTag& t) { return json::array({to_string(t.left), to_string(t.right)}); }

json classification_json(const Classification& c) {
    json r;
    r["tag"] = tag_json(c.tag);
    r["dedekind"] = c.dedekind;
    r["positive"] = c.positive;
    r["scott"] = c.scott;
    r["additive"] = c.additive;
    r["multiplicative"] = c.multiplicative;
    return r;
}

std::string verdict_word(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Undecided: return "undecided";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

struct Runner {
    Session ses;
    json body = json::array();
    std::ostringstream text;
    bool all_pass = true;

    json& entry(const std::string& command, const std::string& binding) {
        json e;
        e["command"] = command;
        e["binding"] = binding;
        e["result"] = nullptr;
        e["witnesses"] = nullptr;
        e["search_certificate"] = nullptr;
        body.push_back(std::move(e));
        return body.back();
    }

    SearchBounds bounds() const {
        SearchBounds b;
        b.degree = ses.cfg.max_degree;
        b.height = ses.cfg.max_height;
        return b;
    }

    void run_line(const std::string& raw, int line);
    void do_family(const std::vector<std::string>& toks, int line);
    void do_hull(const std::vector<std::string>& toks, int line);
    void do_iterate(const std::vector<std::string>& toks, int line);
    void do_verify(const std::vector<std::string>& toks, int line);
    json hull_json(const HullResult& h) const;
    TowerElem arg_elem(const std::string& val, const TowerFieldPtr& K, int line);
};

TowerElem Runner::arg_elem(const std::string& val, const TowerFieldPtr& K, int line) {
    auto it = ses.elems.find(val);
    if (it != ses.elems.end()) return it->second;
    return TowerElem(K, eval_expr(val, line, ses));
}

json Runner::hull_json(const HullResult& h) const {
    json r;
    r["base"] = h.base->name();
    r["extension"] = h.L->name();
    r["chosen"] = h.chosen;
    r["realized"] = h.realized;
    return r;
}

void Runner::do_family(const std::vector<std::string>& toks, int line) {
    // family F = C1 with x1, C2 with x2, C3
    if (toks.size() < 4 || toks[2] != "=") throw script_error(line, "expected 'family F = ...'");
    std::string joined;
    for (std::size_t i = 3; i < toks.size(); ++i) joined += (i > 3 ? " " : "") + toks[i];
    CutFamily fam;
    std::istringstream is(joined);
    std::string part;
    bool any_realization = false;
    while (std::getline(is, part, ',')) {
        std::vector<std::string> ps = split_ws(part);
        if (ps.empty()) throw script_error(line, "empty family member");
        auto it = ses.cuts.find(ps[0]);
        if (it == ses.cuts.end()) throw lookup_error(line, "unknown cut '" + ps[0] + "'");
        if (!fam.K) fam.K = it->second.field();
        if (ps.size() == 1) {
            fam.add(it->second);
        } else if (ps.size() == 3 && ps[1] == "with") {
            fam.add(it->second, arg_elem(ps[2], fam.K, line));
            any_realization = true;
        } else {
            throw script_error(line, "expected 'CUT' or 'CUT with ELEM' in family");
        }
    }
    if (any_realization && fam.realizations.size() != fam.cuts.size())
        throw script_error(line, "either all or no family members carry realizations");
    ses.families[toks[1]] = fam;
    json& e = entry("family", toks[1]);
    e["result"] = {{"size", fam.size()}, {"base", fam.K ? fam.K->name() : ""}};
    text << "family " << toks[1] << ": " << fam.size() << " cuts over "
         << (fam.K ? fam.K->name() : "?") << "\n";
}

void Runner::do_hull(const std::vector<std::string>& toks, int line) {
    // hull K with family F filter symmetric|all
    if (toks.size() != 7 || toks[2] != "with" || toks[3] != "family" || toks[5] != "filter")
        throw script_error(line, "expected 'hull K with family F filter symmetric|all'");
    TowerFieldPtr K = resolve_field(toks[1], line, ses);
    auto it = ses.families.find(toks[4]);
    if (it == ses.families.end()) throw lookup_error(line, "unknown family '" + toks[4] + "'");
    HullFilter f;
    if (toks[6] == "symmetric") f = HullFilter::Symmetric;
    else if (toks[6] == "all") f = HullFilter::All;
    else throw script_error(line, "filter must be 'symmetric' or 'all'");
    HullResult h = one_step_hull(K, it->second, f, {}, bounds(), ses.cfg.fuel);
    json& e = entry("hull", toks[4]);
    e["result"] = hull_json(h);
    e["search_certificate"] = {{"degree", h.bounds.degree},
                               {"height", h.bounds.height},
                               {"ramification", h.bounds.ramification},
                               {"candidates_examined", h.candidates_examined}};
    text << "hull " << K->name() << " -> " << h.L->name() << ": chose " << h.chosen.size()
         << " cut(s), " << h.realized.size() << " realized, " << h.candidates_examined
         << " candidates examined\n";
}

void Runner::do_iterate(const std::vector<std::string>& toks, int line) {
    // iterate K filter symmetric|all steps N
    if (toks.size() != 6 || toks[2] != "filter" || toks[4] != "steps")
        throw script_error(line, "expected 'iterate K filter symmetric|all steps N'");
    TowerFieldPtr K = resolve_field(toks[1], line, ses);
    HullFilter f;
    if (toks[3] == "symmetric") f = HullFilter::Symmetric;
    else if (toks[3] == "all") f = HullFilter::All;
    else throw script_error(line, "filter must be 'symmetric' or 'all'");
    int steps = std::stoi(toks[5]);
    std::size_t n = ses.cfg.gens;
    // per-level catalog: the element cut of the deepest external generator,
    // realized by that generator itself
    auto per_level = [n](const TowerFieldPtr& F) {
        CutFamily fam;
        fam.K = F;
        std::vector<int> ext = F->external_gens();
        if (!ext.empty()) {
            int g = ext.back();
            FragElem tg = FragElem::generator(n, static_cast<std::size_t>(g));
            fam.add(CutSpec::element_induced(F, TowerElem(F, tg)), TowerElem(F, tg));
        }
        return fam;
    };
    auto chain = iterate_hull(K, per_level, f, {}, steps, 4, bounds(), ses.cfg.fuel);
    json& e = entry("iterate", toks[1]);
    json levels = json::array();
    for (const HullResult& h : chain) levels.push_back(hull_json(h));
    e["result"] = std::move(levels);
    text << "iterate " << K->name() << ": chain of " << chain.size() << " level(s)";
    if (!chain.empty()) text << ", top " << chain.back().L->name();
    text << "\n";
}

void Runner::do_verify(const std::vector<std::string>& toks, int line) {
    // verify KIND key=value ...
    if (toks.size() < 2) throw script_error(line, "expected 'verify KIND ...'");
    const std::string& kind = toks[1];
    std::map<std::string, std::string> args;
    for (std::size_t i = 2; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos)
            throw script_error(line, "expected key=value, got '" + toks[i] + "'");
        args[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    auto need = [&](const std::string& k) -> const std::string& {
        auto it = args.find(k);
        if (it == args.end()) throw script_error(line, "verify " + kind + " needs " + k + "=...");
        return it->second;
    };
    auto get_cut = [&](const std::string& name) -> const CutSpec& {
        auto it = ses.cuts.find(name);
        if (it == ses.cuts.end()) throw lookup_error(line, "unknown cut '" + name + "'");
        return it->second;
    };

    json& e = entry("verify", kind);
    auto finish = [&](const LemmaReport& rep) {
        e["result"] = verdict_word(rep.verdict);
        if (!rep.witness.empty()) e["witnesses"] = rep.witness;
        text << rep.str() << "\n";
        if (rep.verdict != Verdict::Pass) all_pass = false;
    };

    if (kind == "multiplicative_bound") {
        std::optional<CutSpec> C;
        TowerFieldPtr K;
        if (args.count("cut")) {
            C = get_cut(args.at("cut"));
            K = C->field();
        } else {
            K = TowerField::rationals_rc(ses.cfg.gens);
        }
        TowerElem x = arg_elem(need("x"), K, line), y = arg_elem(need("y"), K, line);
        // default cut: the one x itself induces over the rationals
        if (!C) {
            if (!x.is_frag()) throw lookup_error(line, "x must be a fragment");
            x = TowerElem(K, x.frag());
            C = CutSpec::element_induced(K, x);
        }
        finish(check_multiplicative_bound(*C, x, y, 8, ses.cfg.fuel));
    } else if (kind == "quotient" || kind == "difference") {
        TowerFieldPtr K = resolve_field(need("base"), line, ses);
        const CutSpec& C = get_cut(need("cut"));
        TowerElem x = arg_elem(need("x"), C.field(), line);
        TowerElem y = arg_elem(need("y"), C.field(), line);
        finish(kind == "quotient" ? check_quotient_cut(K, C, x, y, ses.cfg.fuel)
                                  : check_difference_cut(K, C, x, y, ses.cfg.fuel));
    } else if (kind == "scott_gap") {
        const CutSpec& C = get_cut(need("cut"));
        TowerElem x = arg_elem(need("x"), C.field(), line);
        TowerElem y = arg_elem(need("y"), C.field(), line);
        finish(check_scott_gap(C, x, y, ses.cfg.fuel));
    } else if (kind == "monotone") {
        TowerFieldPtr K = resolve_field(need("over"), line, ses);
        // num and den are dense coefficient lists c0;c1;..., constant first
        auto poly_of = [&](const std::string& spec) {
            std::vector<FragElem> cs;
            std::istringstream is(spec);
            std::string c;
            while (std::getline(is, c, ';')) cs.push_back(eval_expr(c, line, ses));
            return Poly<FragElem>(cs);
        };
        Poly<FragElem> num = poly_of(need("num")), den = poly_of(need("den"));
        FragElem lo = eval_expr(need("lo"), line, ses), hi = eval_expr(need("hi"), line, ses);
        auto pieces = piecewise_monotone_decompose(K, num, den, lo, hi, ses.cfg.fuel);
        json out = json::array();
        for (const MonoPiece& p : pieces)
            out.push_back({{"lo", p.lo.str()}, {"hi", p.hi.str()}, {"mode", to_string(p.mode)}});
        e["result"] = std::move(out);
        text << "monotone: " << pieces.size() << " piece(s)\n";
        for (const MonoPiece& p : pieces)
            text << "  [" << p.lo.str() << ", " << p.hi.str() << "] " << to_string(p.mode) << "\n";
    } else if (kind == "asymmetric") {
        TowerFieldPtr K = resolve_field(need("over"), line, ses);
        auto pairs = build_asymmetric_examples(K);
        json out = json::array();
        for (const auto& [tag, cut] : pairs) {
            json one;
            one["tag"] = tag_json(tag);
            one["cut"] = cut.str();
            one["classification"] = classification_json(classify(cut, ses.cfg.fuel));
            if (json::array({to_string(tag.left), to_string(tag.right)}) != one["tag"])
                all_pass = false;
            out.push_back(std::move(one));
            text << "asymmetric " << tag.str() << ": " << cut.str() << "\n";
        }
        e["result"] = std::move(out);
    } else {
        throw script_error(line, "unknown verify kind '" + kind + "'");
    }
}

void Runner::run_line(const std::string& raw, int line) {
    std::vector<std::string> toks = split_ws(strip_comment(raw));
    if (toks.empty()) return;
    const std::string& head = toks[0];

    if (head == "field") {
        if (toks.size() != 4 || toks[2] != "=")
            throw script_error(line, "expected 'field K = Q_rc(...)'");
        auto f = parse_field_literal(toks[3], line, ses);
        if (!f) throw script_error(line, "expected a field literal Q_rc(...)");
        ses.fields[toks[1]] = *f;
        json& e = entry("field", toks[1]);
        e["result"] = (*f)->name();
        text << "field " << toks[1] << " = " << (*f)->name() << "\n";
    } else if (head == "elem") {
        if (toks.size() != 6 || toks[2] != "=" || toks[4] != "over")
            throw script_error(line, "expected 'elem x = EXPR over K'");
        TowerFieldPtr K = resolve_field(toks[5], line, ses);
        FragElem a = eval_expr(toks[3], line, ses);
        ses.elems.insert_or_assign(toks[1], TowerElem(K, a));
        json& e = entry("elem", toks[1]);
        e["result"] = a.str();
        text << "elem " << toks[1] << " = " << a.str() << " over " << K->name() << "\n";
    } else if (head == "cut") {
        if (toks.size() < 4 || toks[2] != "=") throw script_error(line, "expected 'cut C = ...'");
        CutSpec c = parse_cut_literal(toks, 3, line, ses);
        ses.cuts.insert_or_assign(toks[1], c);
        json& e = entry("cut", toks[1]);
        e["result"] = c.str();
        text << "cut " << toks[1] << " = " << c.str() << "\n";
    } else if (head == "family") {
        do_family(toks, line);
    } else if (head == "classify") {
        if (toks.size() != 2) throw script_error(line, "expected 'classify C'");
        auto it = ses.cuts.find(toks[1]);
        if (it == ses.cuts.end()) throw lookup_error(line, "unknown cut '" + toks[1] + "'");
        Classification c = classify(it->second, ses.cfg.fuel);
        json& e = entry("classify", toks[1]);
        e["result"] = classification_json(c);
        text << "classify " << toks[1] << ": " << c.str() << "\n";
    } else if (head == "derive") {
        if (toks.size() != 5 || toks[2] != "=" || (toks[3] != "add" && toks[3] != "mlt"))
            throw script_error(line, "expected 'derive D = add|mlt C'");
        auto it = ses.cuts.find(toks[4]);
        if (it == ses.cuts.end()) throw lookup_error(line, "unknown cut '" + toks[4] + "'");
        CutSpec d = toks[3] == "add" ? derive_add(it->second, ses.cfg.fuel)
                                     : derive_mlt(it->second, ses.cfg.fuel);
        ses.cuts.insert_or_assign(toks[1], d);
        json& e = entry("derive", toks[1]);
        e["result"] = d.str();
        text << "derive " << toks[1] << " = " << toks[3] << " " << toks[4] << ": " << d.str()
             << "\n";
    } else if (head == "hull") {
        do_hull(toks, line);
    } else if (head == "iterate") {
        do_iterate(toks, line);
    } else if (head == "verify") {
        do_verify(toks, line);
    } else if (head == "report") {
        json& e = entry("report", "");
        json bindings;
        json fs = json::array(), es = json::array(), cs = json::array(), fams = json::array();
        for (const auto& [k, v] : ses.fields) fs.push_back(k + " = " + v->name());
        for (const auto& [k, v] : ses.elems) es.push_back(k + " = " + v.str());
        for (const auto& [k, v] : ses.cuts) cs.push_back(k + " = " + v.str());
        for (const auto& [k, v] : ses.families)
            fams.push_back(k + ": " + std::to_string(v.size()) + " cuts");
        bindings["fields"] = fs;
        bindings["elems"] = es;
        bindings["cuts"] = cs;
        bindings["families"] = fams;
        e["result"] = std::move(bindings);
        text << "report: " << ses.fields.size() << " field(s), " << ses.elems.size()
             << " element(s), " << ses.cuts.size() << " cut(s), " << ses.families.size()
             << " family(ies)\n";
    } else {
        throw script_error(line, "unknown statement '" + head + "'");
    }
}

json header_json(const Config& cfg) {
    json h;
    h["version"] = kVersion;
    h["config"] = {{"fuel", cfg.fuel},
                   {"max_degree", cfg.max_degree},
                   {"max_height", cfg.max_height},
                   {"gens", cfg.gens},
                   {"seed", cfg.seed}};
    return h;
}

int run_script(std::istream& in, const Config& cfg, const std::string& json_path,
               bool require_pass) {
    Runner r;
    r.ses.cfg = cfg;
    std::string line;
    int lineno = 0;
    int code = 0;
    try {
        while (std::getline(in, line)) r.run_line(line, ++lineno);
    } catch (const script_error& ex) {
        std::cerr << "syntax error: " << ex.what() << "\n";
        code = 2;
    } catch (const lookup_error& ex) {
        std::cerr << "binding error: " << ex.what() << "\n";
        code = 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: line " << lineno << ": " << ex.what() << "\n";
        code = 4;
    }
    std::cout << r.text.str();
    if (!json_path.empty()) {
        json doc;
        doc["header"] = header_json(cfg);
        doc["body"] = std::move(r.body);
        std::string s = doc.dump(2) + "\n";
        if (json_path == "-") {
            std::cout << s;
        } else {
            std::ofstream out(json_path, std::ios::binary);
            out << s;
        }
    }
    if (code == 0 && require_pass && !r.all_pass) code = 1;
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cutforge: cuts and towers of ordered fields"};
    app.require_subcommand(1);

    Config cfg;
    std::string script, json_path, cut_literal;

    auto add_flags = [&cfg](CLI::App* c) {
        c->add_option("--fuel", cfg.fuel, "inspection budget for lazy comparisons");
        c->add_option("--max-degree", cfg.max_degree, "exponent bound for realization searches");
        c->add_option("--max-height", cfg.max_height, "coefficient bound for realization searches");
        c->add_option("--gens", cfg.gens, "ambient tower size");
        c->add_option("--seed", cfg.seed, "seed recorded in the report header");
    };

    CLI::App* run = app.add_subcommand("run", "execute a script");
    run->add_option("script", script, "script file, or - for stdin")->required();
    run->add_option("--json", json_path, "write the JSON report here (- for stdout)");
    add_flags(run);

    CLI::App* ver = app.add_subcommand("verify", "execute a suite; nonzero exit unless all pass");
    ver->add_option("script", script, "suite file, or - for stdin")->required();
    ver->add_option("--json", json_path, "write the JSON report here (- for stdout)");
    add_flags(ver);

    CLI::App* cls = app.add_subcommand("classify", "classify one cut literal");
    cls->add_option("-e,--expr", cut_literal, "cut literal, e.g. 'elem(1/t2) over Q_rc(t1)'")
        ->required();
    cls->add_option("--json", json_path, "write the JSON report here (- for stdout)");
    add_flags(cls);

    CLI11_PARSE(app, argc, argv);

    if (cls->parsed()) {
        std::istringstream one("cut C = " + cut_literal + "\nclassify C\n");
        return run_script(one, cfg, json_path, false);
    }

    std::ifstream file;
    std::istream* in = &std::cin;
    if (script != "-") {
        file.open(script);
        if (!file) {
            std::cerr << "error: cannot open " << script << "\n";
            return 2;
        }
        in = &file;
    }
    return run_script(*in, cfg, json_path, ver->parsed());
}
