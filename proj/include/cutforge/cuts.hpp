#ifndef CUTFORGE_CUTS_HPP
#define CUTFORGE_CUTS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutforge/tower_ops.hpp"

namespace cutforge {

enum class CutSide { Left, Right };

inline std::string to_string(CutSide s) { return s == CutSide::Left ? "Left" : "Right"; }

// Cofinality shadow: each side of a cut is empty (0), has an extreme
// element (1), or needs a countable approach (w).
enum class Cof : int { Zero = 0, One = 1, Omega = 2 };

inline std::string to_string(Cof c) {
    return c == Cof::Zero ? "0" : c == Cof::One ? "1" : "w";
}

struct CofinalityTag {
    Cof left = Cof::Omega;
    Cof right = Cof::Omega;

    bool symmetric() const { return left == right; }
    friend bool operator==(const CofinalityTag& a, const CofinalityTag& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator!=(const CofinalityTag& a, const CofinalityTag& b) { return !(a == b); }
    std::string str() const { return "(" + to_string(left) + "," + to_string(right) + ")"; }
};

// Generating sequences for a cut: lower strictly increasing, upper strictly
// decreasing, with no element of the base field caught strictly between
// their closures. Terms are fragments of the base field.
struct CutSeq {
    std::function<FragElem(long)> lower;
    std::function<FragElem(long)> upper;
    std::string lower_label = "lower";
    std::string upper_label = "upper";
};

// Immutable description of a cut over a base field K. All classification
// queries are pure functions of the spec plus a fuel budget.
class CutSpec {
  public:
    enum class Kind { ElementInduced, PlusInfinity, MinusInfinity, AbovePoint, BelowPoint,
                      SeqGenerated };

    static CutSpec element_induced(TowerFieldPtr K, TowerElem a) {
        if (a.is_frag() && K->contains(a.frag()))
            throw precondition_error("element_induced: witness lies in the base field");
        CutSpec c(Kind::ElementInduced, std::move(K));
        c.witness_ = std::move(a);
        return c;
    }
    static CutSpec plus_infinity(TowerFieldPtr K) { return CutSpec(Kind::PlusInfinity, std::move(K)); }
    static CutSpec minus_infinity(TowerFieldPtr K) {
        return CutSpec(Kind::MinusInfinity, std::move(K));
    }
    static CutSpec above_point(TowerFieldPtr K, FragElem a) {
        if (!K->contains(a)) throw precondition_error("above_point: point outside the base field");
        CutSpec c(Kind::AbovePoint, std::move(K));
        c.point_ = std::move(a);
        return c;
    }
    static CutSpec below_point(TowerFieldPtr K, FragElem a) {
        if (!K->contains(a)) throw precondition_error("below_point: point outside the base field");
        CutSpec c(Kind::BelowPoint, std::move(K));
        c.point_ = std::move(a);
        return c;
    }
    static CutSpec seq_generated(TowerFieldPtr K, CutSeq seq) {
        CutSpec c(Kind::SeqGenerated, std::move(K));
        c.seq_ = std::move(seq);
        return c;
    }

    Kind kind() const { return kind_; }
    const TowerFieldPtr& field() const { return field_; }
    const TowerElem& witness() const { return witness_; }
    const FragElem& point() const { return point_; }
    const CutSeq& seq() const { return seq_; }

    std::string str() const {
        switch (kind_) {
            case Kind::ElementInduced: return "elem(" + witness_.str() + ") over " + field_->name();
            case Kind::PlusInfinity: return "+inf over " + field_->name();
            case Kind::MinusInfinity: return "-inf over " + field_->name();
            case Kind::AbovePoint: return "above(" + point_.str() + ") over " + field_->name();
            case Kind::BelowPoint: return "below(" + point_.str() + ") over " + field_->name();
            case Kind::SeqGenerated:
                return "seq(lower: " + seq_.lower_label + ", upper: " + seq_.upper_label +
                       ") over " + field_->name();
        }
        return "";
    }

  private:
    CutSpec(Kind k, TowerFieldPtr K) : kind_(k), field_(std::move(K)) {}

    Kind kind_;
    TowerFieldPtr field_;
    TowerElem witness_;
    FragElem point_;
    CutSeq seq_;
};

namespace cutdetail {

inline int top_kgen(const TowerField& K) {
    int m = -1;
    for (int g : K.gens()) m = std::max(m, g);
    return m;
}

// top nonzero coordinate of a valuation vector, or -1 for the zero vector
inline int top_coord(const ExpVec& v) {
    for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j)
        if (sgn(v[j]) != 0) return j;
    return -1;
}

// Classification data for the cut an element induces on K: the cofinality
// tag, the matched K-part b_k (best approximation from inside K when one
// exists), and valuation/sign of the unmatched remainder a - b_k.
struct ElemCutInfo {
    CofinalityTag tag;
    FragElem b_k;
    bool have_delta = false;
    ExpVec delta_val;
    int delta_sign = 0;
    bool limit = false;  // stream whose scanned prefix stays inside K
};

// Peels the witness one generator at a time, most significant first.
// Generators deeper than every K generator either dominate K outright
// (negative exponent), split off a K-infinitesimal remainder (positive
// exponent), or are absent. Whatever survives is either a K element (the
// cut has an extreme point next to it) or still involves a generator
// interleaved with K's scales, which pins the tag at (w,w).
inline ElemCutInfo analyze_frag(const FragElem& a0, const TowerField& K, int fuel) {
    std::size_t n = std::max<std::size_t>(a0.ngens(), K.ambient_gens());
    FragElem a = a0.promoted(n);
    int M = top_kgen(K);
    ElemCutInfo info;

    FragElem cur = a;
    bool eps_seen = false;
    int eps_sign = 0;
    ExpVec eps_val(n);
    for (int j = static_cast<int>(n) - 1; j > M; --j) {
        if (cur.zero() || !cur.involves(static_cast<std::size_t>(j))) continue;
        if (sgn(cur.den().min_exponent(static_cast<std::size_t>(j))) > 0) {
            // t_j^{-q} leading behaviour exceeds every K element in magnitude
            info.tag = cur.sign() > 0 ? CofinalityTag{Cof::Omega, Cof::Zero}
                                      : CofinalityTag{Cof::Zero, Cof::Omega};
            info.have_delta = true;
            info.delta_val = cur.val();
            info.delta_sign = cur.sign();
            return info;
        }
        FragElem b = cur.at_zero(static_cast<std::size_t>(j));
        FragElem eps = cur - b;
        if (!eps.zero()) {
            eps_seen = true;
            eps_sign = eps.sign();
            eps_val = eps.val();
        }
        cur = b;
    }

    if (K.contains(cur)) {
        if (!eps_seen) throw precondition_error("cut witness lies in the base field");
        info.tag = eps_sign > 0 ? CofinalityTag{Cof::One, Cof::Omega}
                                : CofinalityTag{Cof::Omega, Cof::One};
        info.b_k = cur;
        info.have_delta = true;
        info.delta_val = eps_val;
        info.delta_sign = eps_sign;
        return info;
    }

    // a generator below some K generator but outside K survives: strictly
    // interleaved scales, no extreme point on either side
    info.tag = CofinalityTag{Cof::Omega, Cof::Omega};
    FragElem bk = cur;
    for (int j = M - 1; j >= 0; --j) {
        if (K.has_gen(j) || bk.zero() || !bk.involves(static_cast<std::size_t>(j))) continue;
        if (sgn(bk.den().min_exponent(static_cast<std::size_t>(j))) > 0) {
            // pole at an interleaved scale: substitution is unavailable, so
            // read the matched prefix straight off the series expansion
            Puiseux prefix(n);
            auto ex = bk.expand();
            bool found = false;
            for (int i = 0; i < fuel; ++i) {
                auto t = ex.next();
                if (!t) break;
                if (t->first.supported_on(K.gens())) {
                    prefix = prefix + Puiseux::monomial(n, t->second, t->first);
                    continue;
                }
                found = true;
                break;
            }
            if (!found) throw undecided_error(fuel);
            bk = FragElem(prefix);
            break;
        }
        bk = bk.at_zero(static_cast<std::size_t>(j));
    }
    if (!K.contains(bk)) bk = FragElem(0);
    info.b_k = bk;
    FragElem delta = a - bk.promoted(n);
    info.have_delta = true;
    info.delta_val = delta.val();
    info.delta_sign = delta.sign();
    return info;
}

inline ElemCutInfo analyze_stream(const StreamElem& s, const TowerField& K, int fuel) {
    std::size_t n = std::max<std::size_t>(s.ngens(), K.ambient_gens());
    int M = top_kgen(K);
    ElemCutInfo info;
    Puiseux prefix(n);
    for (int i = 0; i < fuel; ++i) {
        auto t = s.term(static_cast<std::size_t>(i));
        if (!t) throw precondition_error("cut witness lies in the base field");
        ExpVec e(n);
        for (std::size_t c = 0; c < t->first.size(); ++c) e[c] = t->first[c];
        if (e.supported_on(K.gens())) {
            prefix = prefix + Puiseux::monomial(n, t->second, e);
            continue;
        }
        int j = top_coord(e);
        info.b_k = FragElem(prefix);
        info.have_delta = true;
        info.delta_val = e;
        info.delta_sign = t->second.sign();
        if (j > M) {
            if (sgn(e[static_cast<std::size_t>(j)]) > 0) {
                info.tag = info.delta_sign > 0 ? CofinalityTag{Cof::One, Cof::Omega}
                                               : CofinalityTag{Cof::Omega, Cof::One};
            } else {
                info.tag = info.delta_sign > 0 ? CofinalityTag{Cof::Omega, Cof::Zero}
                                               : CofinalityTag{Cof::Zero, Cof::Omega};
            }
        } else {
            info.tag = CofinalityTag{Cof::Omega, Cof::Omega};
        }
        return info;
    }
    // every scanned term lies inside K's scales: the stream is a two-sided
    // limit of its own partial sums
    info.tag = CofinalityTag{Cof::Omega, Cof::Omega};
    info.b_k = FragElem(prefix);
    info.limit = true;
    return info;
}

inline ElemCutInfo analyze_element(const TowerElem& a, const TowerField& K, int fuel) {
    if (a.is_frag()) return analyze_frag(a.frag(), K, fuel);
    if (a.is_stream()) return analyze_stream(a.stream(), K, fuel);
    throw undecided_error(fuel);
}

// exact valuation of the witness (first-term exponent for streams)
inline ExpVec witness_val(const TowerElem& a, const TowerField& K, int fuel) {
    std::size_t n = std::max<std::size_t>(a.ngens(), K.ambient_gens());
    ExpVec v = val(a, fuel);
    ExpVec out(n);
    for (std::size_t c = 0; c < v.size(); ++c) out[c] = v[c];
    return out;
}

inline FragElem monomial_frag(std::size_t n, const ExpVec& e) {
    return FragElem::monomial(n, RealAlg(1), e);
}

}  // namespace cutdetail

// Which side of the cut a base-field element falls on.
inline CutSide side(const CutSpec& C, const TowerElem& k, int fuel = kDefaultFuel) {
    switch (C.kind()) {
        case CutSpec::Kind::PlusInfinity: return CutSide::Left;
        case CutSpec::Kind::MinusInfinity: return CutSide::Right;
        case CutSpec::Kind::AbovePoint: {
            TowerElem p(C.field(), C.point());
            return cmp(k, p, fuel) != Ord::GT ? CutSide::Left : CutSide::Right;
        }
        case CutSpec::Kind::BelowPoint: {
            TowerElem p(C.field(), C.point());
            return cmp(k, p, fuel) == Ord::LT ? CutSide::Left : CutSide::Right;
        }
        case CutSpec::Kind::ElementInduced:
            return cmp(k, C.witness(), fuel) == Ord::LT ? CutSide::Left : CutSide::Right;
        case CutSpec::Kind::SeqGenerated: {
            for (int i = 0; i < fuel; ++i) {
                try {
                    TowerElem lo(C.field(), C.seq().lower(i));
                    if (cmp(k, lo, fuel) != Ord::GT) return CutSide::Left;
                    TowerElem hi(C.field(), C.seq().upper(i));
                    if (cmp(k, hi, fuel) != Ord::LT) return CutSide::Right;
                } catch (const undecided_error&) {
                    // a later generator may still settle it
                }
            }
            throw undecided_error(fuel);
        }
    }
    throw std::logic_error("side: bad kind");
}

inline CutSide side(const CutSpec& C, const FragElem& k, int fuel = kDefaultFuel) {
    return side(C, TowerElem(C.field(), k), fuel);
}

inline CofinalityTag cofinality(const CutSpec& C, int fuel = kDefaultFuel) {
    switch (C.kind()) {
        case CutSpec::Kind::PlusInfinity: return {Cof::Omega, Cof::Zero};
        case CutSpec::Kind::MinusInfinity: return {Cof::Zero, Cof::Omega};
        case CutSpec::Kind::AbovePoint: return {Cof::One, Cof::Omega};
        case CutSpec::Kind::BelowPoint: return {Cof::Omega, Cof::One};
        case CutSpec::Kind::SeqGenerated: return {Cof::Omega, Cof::Omega};
        case CutSpec::Kind::ElementInduced:
            return cutdetail::analyze_element(C.witness(), *C.field(), fuel).tag;
    }
    throw std::logic_error("cofinality: bad kind");
}

inline bool is_symmetric(const CutSpec& C, int fuel = kDefaultFuel) {
    return cofinality(C, fuel).symmetric();
}

inline bool is_dedekind(const CutSpec& C, int fuel = kDefaultFuel) {
    switch (C.kind()) {
        case CutSpec::Kind::SeqGenerated: return true;
        case CutSpec::Kind::ElementInduced:
            return cofinality(C, fuel) == CofinalityTag{Cof::Omega, Cof::Omega};
        default: return false;
    }
}

// Does the left side contain a positive element?
inline bool is_positive(const CutSpec& C, int fuel = kDefaultFuel) {
    switch (C.kind()) {
        case CutSpec::Kind::PlusInfinity: return true;
        case CutSpec::Kind::MinusInfinity: return false;
        case CutSpec::Kind::AbovePoint: return C.point().sign() > 0;
        case CutSpec::Kind::BelowPoint: return C.point().sign() > 0;
        case CutSpec::Kind::ElementInduced: {
            if (sign_of(C.witness(), fuel) <= 0) return false;
            auto info = cutdetail::analyze_element(C.witness(), *C.field(), fuel);
            // positive but below every positive K element: left side is the
            // nonpositive half
            bool tiny = !info.tag.symmetric() && info.tag.right == Cof::Omega &&
                        info.b_k.zero() && info.tag.left == Cof::One;
            return !tiny;
        }
        case CutSpec::Kind::SeqGenerated: {
            for (int i = 0; i < fuel; ++i) {
                if (C.seq().lower(i).sign() > 0) return true;
                if (C.seq().upper(i).sign() <= 0) return false;
            }
            throw undecided_error(fuel);
        }
    }
    throw std::logic_error("is_positive: bad kind");
}

namespace cutdetail {

inline constexpr int kScottChecks = 6;

// true when val(g) lies beyond t_M^m, i.e. g < t_M^m as elements
inline bool val_beyond(const ExpVec& v, int M, long m) {
    ExpVec ref(v.size());
    ref[static_cast<std::size_t>(M)] = Rat(m);
    return ev_cmp(v, ref) > 0;
}

}  // namespace cutdetail

// Do the gap widths of a Dedekind cut shrink below every positive element
// of K? Checked against the ladder t_M^m (M = deepest K generator), which
// is coinitial in the positive part of K.
inline bool is_scott(const CutSpec& C, int fuel = kDefaultFuel) {
    if (!is_dedekind(C, fuel)) throw precondition_error("is_scott: cut is not Dedekind");
    const TowerField& K = *C.field();
    int M = cutdetail::top_kgen(K);

    std::vector<ExpVec> gap_vals;
    if (C.kind() == CutSpec::Kind::SeqGenerated) {
        for (int i = 0; i < fuel; ++i) {
            FragElem g = C.seq().upper(i) - C.seq().lower(i);
            if (g.sign() <= 0) throw precondition_error("is_scott: generating sequences cross");
            gap_vals.push_back(g.val());
        }
    } else {
        auto info = cutdetail::analyze_element(C.witness(), K, fuel);
        if (!info.limit) return false;  // remainder pinned at a fixed scale
        const StreamElem& s = C.witness().stream();
        for (int i = 0; i < fuel; ++i) {
            auto t = s.term(static_cast<std::size_t>(i));
            if (!t) break;
            gap_vals.push_back(t->first);
        }
    }
    if (M < 0 || gap_vals.size() < 2) throw undecided_error(fuel);
    // a stabilized gap scale is defeated by any smaller K element
    if (gap_vals[gap_vals.size() - 1] == gap_vals[gap_vals.size() - 2]) return false;
    for (long m = 1; m <= cutdetail::kScottChecks; ++m) {
        bool witnessed = false;
        for (const ExpVec& v : gap_vals) {
            ExpVec vm(static_cast<std::size_t>(std::max<std::size_t>(
                v.size(), static_cast<std::size_t>(M) + 1)));
            for (std::size_t c = 0; c < v.size(); ++c) vm[c] = v[c];
            if (cutdetail::val_beyond(vm, M, m)) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) return false;
    }
    return true;
}

// Is the left side closed under addition (and inhabited by positives)?
inline bool is_additive(const CutSpec& C, int fuel = kDefaultFuel) {
    switch (C.kind()) {
        case CutSpec::Kind::PlusInfinity: return true;
        case CutSpec::Kind::MinusInfinity: return false;
        case CutSpec::Kind::AbovePoint:
        case CutSpec::Kind::BelowPoint: return false;  // doubling escapes any endpoint
        case CutSpec::Kind::ElementInduced: {
            if (!is_positive(C, fuel)) return false;
            // closed under doubling iff no K element can match the witness's
            // leading scale
            ExpVec v = cutdetail::witness_val(C.witness(), *C.field(), fuel);
            return !v.supported_on(C.field()->gens());
        }
        case CutSpec::Kind::SeqGenerated: {
            if (!is_positive(C, fuel)) return false;
            for (int i = 0; i < cutdetail::kScottChecks; ++i) {
                FragElem d = C.seq().lower(i) + C.seq().lower(i);
                if (side(C, d, fuel) == CutSide::Right) return false;
            }
            return true;
        }
    }
    throw std::logic_error("is_additive: bad kind");
}

// Is the left side closed under multiplication with 2 on the left?
inline bool is_multiplicative(const CutSpec& C, int fuel = kDefaultFuel) {
    switch (C.kind()) {
        case CutSpec::Kind::PlusInfinity: return true;
        case CutSpec::Kind::MinusInfinity: return false;
        case CutSpec::Kind::AbovePoint:
        case CutSpec::Kind::BelowPoint: return false;  // squaring escapes any endpoint
        case CutSpec::Kind::ElementInduced: {
            TowerElem two(C.field(), FragElem(2));
            if (cmp(two, C.witness(), fuel) != Ord::LT) return false;
            // closed under squaring iff K cannot reach between val(a) and
            // val(a)/2; with a divisible K value group that happens exactly
            // when the most significant scale of a is foreign to K
            ExpVec v = cutdetail::witness_val(C.witness(), *C.field(), fuel);
            int j = cutdetail::top_coord(v);
            return j >= 0 && !C.field()->has_gen(j);
        }
        case CutSpec::Kind::SeqGenerated: {
            if (side(C, FragElem(2), fuel) == CutSide::Right) return false;
            for (int i = 0; i < cutdetail::kScottChecks; ++i) {
                FragElem l = C.seq().lower(i);
                if (l.sign() <= 0) continue;
                if (side(C, l * l, fuel) == CutSide::Right) return false;
            }
            return true;
        }
    }
    throw std::logic_error("is_multiplicative: bad kind");
}

namespace cutdetail {

// candidate monomials t_g^q for the additive kernel of a generated cut,
// largest first so the chosen witness is as tight as the grid allows
inline std::vector<FragElem> kernel_candidates(const TowerField& K) {
    std::vector<FragElem> out;
    std::size_t n = K.ambient_gens();
    std::vector<Rat> qs = {Rat(-2), Rat(-1), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(3), Rat(4)};
    std::vector<int> gens = K.gens();
    std::sort(gens.begin(), gens.end());
    out.push_back(FragElem(1).promoted(n));
    for (int g : gens)
        for (const Rat& q : qs) out.push_back(FragElem::generator(n, static_cast<std::size_t>(g), q));
    std::sort(out.begin(), out.end(), [](const FragElem& a, const FragElem& b) { return a > b; });
    return out;
}

}  // namespace cutdetail

// The cut whose left side is {r : r + C^- stays inside C^-}.
inline CutSpec derive_add(const CutSpec& C, int fuel = kDefaultFuel) {
    const TowerFieldPtr& K = C.field();
    switch (C.kind()) {
        case CutSpec::Kind::PlusInfinity:
        case CutSpec::Kind::MinusInfinity: return CutSpec::plus_infinity(K);
        case CutSpec::Kind::AbovePoint:
        case CutSpec::Kind::BelowPoint: return CutSpec::above_point(K, FragElem(0));
        case CutSpec::Kind::ElementInduced: {
            auto info = cutdetail::analyze_element(C.witness(), *K, fuel);
            if (info.tag.left == Cof::Zero || info.tag.right == Cof::Zero)
                return CutSpec::plus_infinity(K);
            if (info.limit) return CutSpec::above_point(K, FragElem(0));
            if (!info.tag.symmetric()) return CutSpec::above_point(K, FragElem(0));
            // translating by the matched K part leaves the kernel; what is
            // left shifts by exactly the unmatched scale
            std::size_t n = std::max<std::size_t>(C.witness().ngens(), K->ambient_gens());
            ExpVec e(n);
            for (std::size_t c = 0; c < info.delta_val.size(); ++c) e[c] = info.delta_val[c];
            return CutSpec::element_induced(K, TowerElem(K, cutdetail::monomial_frag(n, e)));
        }
        case CutSpec::Kind::SeqGenerated: {
            std::size_t n = K->ambient_gens();
            std::vector<FragElem> gaps;
            for (int i = 0; i < cutdetail::kScottChecks; ++i) {
                FragElem g = C.seq().upper(i) - C.seq().lower(i);
                if (g.sign() <= 0)
                    throw precondition_error("derive_add: generating sequences cross");
                gaps.push_back(g.promoted(n));
            }
            for (const FragElem& w : cutdetail::kernel_candidates(*K)) {
                bool below = true;
                for (const FragElem& g : gaps)
                    if (!(w < g)) {
                        below = false;
                        break;
                    }
                if (!below) continue;
                CutSeq out;
                auto upper = C.seq().upper;
                auto lower = C.seq().lower;
                out.lower = [w](long i) { return FragElem(Rat(i + 1)).promoted(w.ngens()) * w; };
                out.upper = [upper, lower](long i) { return upper(i) - lower(i); };
                out.lower_label = "n*(" + w.str() + ")";
                out.upper_label = "gap(" + C.seq().upper_label + " - " + C.seq().lower_label + ")";
                return CutSpec::seq_generated(K, std::move(out));
            }
            return CutSpec::above_point(K, FragElem(0));
        }
    }
    throw std::logic_error("derive_add: bad kind");
}

// The cut whose left side is {r : r * (C^- /\ K_+) stays inside C^-}.
// Requires a positive cut.
inline CutSpec derive_mlt(const CutSpec& C, int fuel = kDefaultFuel) {
    if (!is_positive(C, fuel)) throw precondition_error("derive_mlt: cut is not positive");
    const TowerFieldPtr& K = C.field();
    switch (C.kind()) {
        case CutSpec::Kind::PlusInfinity: return CutSpec::plus_infinity(K);
        case CutSpec::Kind::MinusInfinity: break;  // unreachable: not positive
        case CutSpec::Kind::AbovePoint:
        case CutSpec::Kind::BelowPoint: return CutSpec::above_point(K, FragElem(1));
        case CutSpec::Kind::ElementInduced: {
            auto info = cutdetail::analyze_element(C.witness(), *K, fuel);
            if (info.tag.right == Cof::Zero) return CutSpec::plus_infinity(K);
            if (info.limit || !info.tag.symmetric())
                return CutSpec::above_point(K, FragElem(1));
            std::size_t n = std::max<std::size_t>(C.witness().ngens(), K->ambient_gens());
            ExpVec dv(n);
            for (std::size_t c = 0; c < info.delta_val.size(); ++c) dv[c] = info.delta_val[c];
            if (info.b_k.sign() > 0 && ev_cmp(dv, info.b_k.promoted(n).val()) > 0) {
                // remainder is small relative to the matched part: the kernel
                // is pinned at the relative scale delta/b_k around 1
                ExpVec rel = dv - info.b_k.promoted(n).val();
                FragElem w = FragElem(1).promoted(n) + cutdetail::monomial_frag(n, rel);
                return CutSpec::element_induced(K, TowerElem(K, w));
            }
            // no dominant matched part: the kernel is "bounded relative to
            // every K scale deeper than the witness's foreign scale"
            int c = -1;
            for (int j = static_cast<int>(n) - 1; j >= 0; --j)
                if (!K->has_gen(j) && sgn(dv[static_cast<std::size_t>(j)]) != 0) {
                    c = j;
                    break;
                }
            int g0 = -1;
            for (int g : K->gens())
                if (g > c && (g0 < 0 || g < g0)) g0 = g;
            if (g0 < 0) return CutSpec::plus_infinity(K);
            int gl = -1;
            for (int g : K->gens())
                if (g < c && g > gl) gl = g;
            CutSeq out;
            std::size_t g0u = static_cast<std::size_t>(g0);
            if (gl >= 0) {
                std::size_t glu = static_cast<std::size_t>(gl);
                out.lower = [n, glu](long i) {
                    return FragElem::generator(n, glu, Rat(-(i + 1)));
                };
                out.lower_label = "t" + std::to_string(gl + 1) + "^-n";
            } else {
                out.lower = [](long i) { return FragElem(Rat(i + 2)); };
                out.lower_label = "n";
            }
            out.upper = [n, g0u](long i) {
                return FragElem::generator(n, g0u, Rat(-1, i + 1));
            };
            out.upper_label = "t" + std::to_string(g0 + 1) + "^(-1/n)";
            return CutSpec::seq_generated(K, std::move(out));
        }
        case CutSpec::Kind::SeqGenerated: {
            // ratios upper/lower bound the kernel from above
            std::vector<FragElem> ratios;
            for (int i = 0; i < cutdetail::kScottChecks; ++i) {
                FragElem l = C.seq().lower(i);
                if (l.sign() <= 0) continue;
                ratios.push_back(C.seq().upper(i) / l);
            }
            if (ratios.empty()) throw undecided_error(fuel);
            bool integers_below = true;
            for (const FragElem& r : ratios)
                if (!(FragElem(1000000).promoted(r.ngens()) < r)) {
                    integers_below = false;
                    break;
                }
            auto lower_seq = C.seq().lower;
            auto upper_seq = C.seq().upper;
            CutSeq out;
            out.upper = [lower_seq, upper_seq](long i) {
                long j = i;
                FragElem l = lower_seq(j);
                while (l.sign() <= 0) l = lower_seq(++j);
                return upper_seq(j) / l;
            };
            out.upper_label = "ratio(" + C.seq().upper_label + " / " + C.seq().lower_label + ")";
            if (integers_below) {
                out.lower = [](long i) { return FragElem(Rat(i + 2)); };
                out.lower_label = "n";
                return CutSpec::seq_generated(K, std::move(out));
            }
            // bounded ratios: the kernel collapses to the archimedean cut,
            // anchored at the deepest K generator when one exists
            int M = cutdetail::top_kgen(*K);
            if (M < 0) return CutSpec::above_point(K, FragElem(1));
            std::size_t n = K->ambient_gens();
            std::size_t Mu = static_cast<std::size_t>(M);
            out.lower = [](long i) { return FragElem(Rat(i + 2)); };
            out.lower_label = "n";
            out.upper = [n, Mu](long i) { return FragElem::generator(n, Mu, Rat(-1, i + 1)); };
            out.upper_label = "t" + std::to_string(M + 1) + "^(-1/n)";
            return CutSpec::seq_generated(K, std::move(out));
        }
    }
    throw std::logic_error("derive_mlt: bad kind");
}

// The same cut read over a subfield L of the base field.
inline CutSpec restrict_to(const CutSpec& C, const TowerFieldPtr& L) {
    if (!L->subfield_of(*C.field()))
        throw precondition_error("restrict_to: not a subfield of the base field");
    switch (C.kind()) {
        case CutSpec::Kind::PlusInfinity: return CutSpec::plus_infinity(L);
        case CutSpec::Kind::MinusInfinity: return CutSpec::minus_infinity(L);
        case CutSpec::Kind::AbovePoint:
            if (L->contains(C.point())) return CutSpec::above_point(L, C.point());
            return CutSpec::element_induced(L, TowerElem(L, C.point()));
        case CutSpec::Kind::BelowPoint:
            if (L->contains(C.point())) return CutSpec::below_point(L, C.point());
            return CutSpec::element_induced(L, TowerElem(L, C.point()));
        case CutSpec::Kind::ElementInduced:
            // the witness is outside K, hence outside any subfield
            return CutSpec::element_induced(L, C.witness());
        case CutSpec::Kind::SeqGenerated: return CutSpec::seq_generated(L, C.seq());
    }
    throw std::logic_error("restrict_to: bad kind");
}

}  // namespace cutforge

#endif
