#ifndef CUTFORGE_TOWER_HPP
#define CUTFORGE_TOWER_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cutforge/errors.hpp"
#include "cutforge/fragelem.hpp"

namespace cutforge {

class TowerElem;

// Descriptor of a subfield K of the ambient field: which infinitesimal
// generators it contains, plus algebraic extension steps (polynomial over
// the fragment so far with an isolating interval). The ambient generator
// count is fixed per construction; subfields pick a subset.
class TowerField {
  public:
    struct Extension {
        Poly<FragElem> poly;  // exactly one root in (lo, hi) over the field
        FragElem lo, hi;
        std::string name;
    };

    TowerField(std::size_t ambient_gens, std::vector<int> gens, std::string name = "")
        : n_(ambient_gens), gens_(std::move(gens)), name_(std::move(name)) {
        for (int g : gens_)
            if (g < 0 || static_cast<std::size_t>(g) >= n_)
                throw std::invalid_argument("TowerField: generator index out of range");
    }

    static std::shared_ptr<const TowerField> rationals_rc(std::size_t ambient_gens) {
        return std::make_shared<TowerField>(ambient_gens, std::vector<int>{}, "Q_rc");
    }
    static std::shared_ptr<const TowerField> with_gens(std::size_t ambient_gens,
                                                       std::vector<int> gens) {
        std::string nm = "Q_rc(";
        for (std::size_t i = 0; i < gens.size(); ++i)
            nm += (i ? ",t" : "t") + std::to_string(gens[i] + 1);
        nm += ")";
        return std::make_shared<TowerField>(ambient_gens, std::move(gens), std::move(nm));
    }

    std::size_t ambient_gens() const { return n_; }
    const std::vector<int>& gens() const { return gens_; }
    const std::vector<Extension>& extensions() const { return exts_; }
    const std::string& name() const { return name_; }

    bool has_gen(int g) const {
        for (int x : gens_)
            if (x == g) return true;
        return false;
    }
    // generators of the ambient field absent from K, ascending
    std::vector<int> external_gens() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (!has_gen(static_cast<int>(i))) out.push_back(static_cast<int>(i));
        return out;
    }

    bool subfield_of(const TowerField& other) const {
        if (n_ != other.n_) return false;
        for (int g : gens_)
            if (!other.has_gen(g)) return false;
        return exts_.empty() || exts_.size() <= other.exts_.size();
    }

    // Fragment membership: supported on K's generators. Algebraic steps
    // extend the fragment; an element of an extension is a member via its
    // tower representation, checked by the TowerElem overload below.
    bool contains(const FragElem& a) const { return a.supported_on(gens_); }
    bool contains(const TowerElem& a) const;

    std::shared_ptr<const TowerField> extended_by_gen(int g, std::string name = "") const {
        auto out = std::make_shared<TowerField>(*this);
        if (!out->has_gen(g)) {
            out->gens_.push_back(g);
            std::sort(out->gens_.begin(), out->gens_.end());
        }
        out->name_ = name.empty() ? name_ + "+t" + std::to_string(g + 1) : std::move(name);
        return out;
    }
    std::shared_ptr<const TowerField> extended_by(Extension ext) const {
        auto out = std::make_shared<TowerField>(*this);
        out->exts_.push_back(std::move(ext));
        out->name_ = name_ + "[" + out->exts_.back().name + "]";
        return out;
    }

  private:
    std::size_t n_;
    std::vector<int> gens_;
    std::vector<Extension> exts_;
    std::string name_;
};

using TowerFieldPtr = std::shared_ptr<const TowerField>;

// Lazy formal series: a computable stream of (exponent, coefficient) pairs
// with strictly increasing exponents. The generator function is indexed by
// term position and memoization makes repeated inspection cheap. All
// inspection is bounded by a per-query fuel parameter supplied by callers.
class StreamElem {
  public:
    using TermFn = std::function<std::optional<std::pair<ExpVec, RealAlg>>(std::size_t)>;

    StreamElem(std::size_t ngens, TermFn fn, std::string label = "stream")
        : n_(ngens), state_(std::make_shared<State>()), label_(std::move(label)) {
        state_->fn = std::move(fn);
    }

    std::size_t ngens() const { return n_; }
    const std::string& label() const { return label_; }

    // i-th term, or nullopt when the stream is exhausted
    std::optional<std::pair<ExpVec, RealAlg>> term(std::size_t i) const {
        State& s = *state_;
        while (s.memo.size() <= i && !s.done) {
            auto t = s.fn(s.memo.size());
            if (!t) {
                s.done = true;
                break;
            }
            if (!s.memo.empty() && !(s.memo.back().first < t->first))
                throw std::logic_error("StreamElem: exponents must strictly increase");
            s.memo.push_back(*t);
        }
        if (i < s.memo.size()) return s.memo[i];
        return std::nullopt;
    }

    Puiseux prefix(std::size_t count) const {
        Puiseux p(n_);
        for (std::size_t i = 0; i < count; ++i) {
            auto t = term(i);
            if (!t) break;
            p.add_term(t->first, t->second);
        }
        return p;
    }

    // shared generator state; copies of the same stream compare equal
    const void* id() const { return state_.get(); }

    StreamElem with_label(std::string l) const {
        StreamElem s = *this;
        s.label_ = std::move(l);
        return s;
    }

  private:
    struct State {
        TermFn fn;
        std::vector<std::pair<ExpVec, RealAlg>> memo;
        bool done = false;
    };
    std::size_t n_;
    std::shared_ptr<State> state_;
    std::string label_;
};

// Algebraic element over a tower subfield: defining polynomial with
// fragment coefficients plus an isolating interval with fragment
// endpoints. Exactly one root lies in (lo, hi), certified by Sturm theory
// over the ordered field.
class AlgElem {
  public:
    AlgElem(Poly<FragElem> p, FragElem lo, FragElem hi)
        : s_(std::make_shared<State>(State{std::move(p), std::move(lo), std::move(hi), {}})) {}

    const Poly<FragElem>& defpoly() const { return s_->p; }
    const FragElem& lo() const { return s_->lo; }
    const FragElem& hi() const { return s_->hi; }

    // widest generator count across the data; endpoints are often scalars
    std::size_t ngens() const {
        std::size_t n = std::max(s_->lo.ngens(), s_->hi.ngens());
        for (const auto& c : s_->p.coeffs()) n = std::max(n, c.ngens());
        return n;
    }

    const std::vector<Poly<FragElem>>& sturm() const {
        if (s_->chain.empty()) s_->chain = sturm_chain(s_->p);
        return s_->chain;
    }

    void refine() const {
        State& s = *s_;
        FragElem mid = (s.lo + s.hi) / FragElem(2);
        if (is_zero(s.p.eval(mid))) {
            // exact fragment root: callers detect via lo == hi
            s.lo = mid;
            s.hi = mid;
            return;
        }
        if (sturm_count(sturm(), s.lo, mid) == 1)
            s.hi = mid;
        else
            s.lo = mid;
    }
    bool collapsed() const { return s_->lo == s_->hi; }

  private:
    struct State {
        Poly<FragElem> p;
        FragElem lo, hi;
        std::vector<Poly<FragElem>> chain;
    };
    std::shared_ptr<State> s_;
};

// Element of the ambient non-archimedean field: a rational Puiseux
// fragment, an algebraic element over a subfield, or a lazy stream. Every
// element carries the subfield it lives in.
class TowerElem {
  public:
    using Payload = std::variant<FragElem, AlgElem, StreamElem>;

    TowerElem() = default;
    TowerElem(TowerFieldPtr field, FragElem v) : field_(std::move(field)), v_(std::move(v)) {}
    TowerElem(TowerFieldPtr field, AlgElem v) : field_(std::move(field)), v_(std::move(v)) {}
    TowerElem(TowerFieldPtr field, StreamElem v) : field_(std::move(field)), v_(std::move(v)) {}

    const TowerFieldPtr& field() const { return field_; }
    bool is_frag() const { return std::holds_alternative<FragElem>(v_); }
    bool is_alg() const { return std::holds_alternative<AlgElem>(v_); }
    bool is_stream() const { return std::holds_alternative<StreamElem>(v_); }
    const FragElem& frag() const { return std::get<FragElem>(v_); }
    const AlgElem& alg() const { return std::get<AlgElem>(v_); }
    const StreamElem& stream() const { return std::get<StreamElem>(v_); }

    std::size_t ngens() const {
        if (is_frag()) return frag().ngens();
        if (is_alg()) return alg().ngens();
        return stream().ngens();
    }

    std::string str() const {
        if (is_frag()) return frag().str();
        if (is_stream()) return stream().label();
        return "algroot(" + alg().defpoly().str("X") + ", " + alg().lo().str() + ", " +
               alg().hi().str() + ")";
    }

  private:
    TowerFieldPtr field_;
    Payload v_;
};

inline bool TowerField::contains(const TowerElem& a) const {
    if (a.is_frag()) return contains(a.frag());
    if (a.is_alg()) {
        // member when its defining data is over this field and the field
        // carries a matching extension step
        for (const auto& e : exts_) {
            if (e.poly == a.alg().defpoly() && e.lo == a.alg().lo() && e.hi == a.alg().hi())
                return true;
        }
        return false;
    }
    return false;  // streams are never field members
}

}  // namespace cutforge

#endif
