#include "knotlineage/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "knotlineage/errors.hpp"

namespace knotlineage {

SkeinPolynomial::SkeinPolynomial(int64_t constant) {
    if (constant != 0) terms_.push_back({0, 0, constant});
}

SkeinPolynomial SkeinPolynomial::term(int64_t coef, int vexp, int zexp) {
    SkeinPolynomial p;
    if (coef != 0)
        p.terms_.push_back({static_cast<int16_t>(zexp), static_cast<int16_t>(vexp), coef});
    return p;
}

SkeinPolynomial SkeinPolynomial::delta() {
    return term(1, -1, -1) + term(-1, 1, -1);
}

bool SkeinPolynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].zexp == 0 && terms_[0].vexp == 0 &&
           terms_[0].coef == 1;
}

SkeinPolynomial& SkeinPolynomial::operator+=(const SkeinPolynomial& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.cend()) {
        if (b == o.terms_.cend() ||
            (a != terms_.cend() && std::pair{a->zexp, a->vexp} < std::pair{b->zexp, b->vexp})) {
            out.push_back(*a++);
        } else if (a == terms_.cend() ||
                   std::pair{b->zexp, b->vexp} < std::pair{a->zexp, a->vexp}) {
            out.push_back(*b++);
        } else {
            Term t = *a;
            t.coef += b->coef;
            if (t.coef != 0) out.push_back(t);
            ++a, ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

SkeinPolynomial& SkeinPolynomial::operator-=(const SkeinPolynomial& o) {
    return *this += -o;
}

SkeinPolynomial SkeinPolynomial::operator-() const {
    SkeinPolynomial p = *this;
    for (Term& t : p.terms_) t.coef = -t.coef;
    return p;
}

SkeinPolynomial SkeinPolynomial::operator*(const SkeinPolynomial& o) const {
    std::map<std::pair<int, int>, int64_t> acc;
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            acc[{a.zexp + b.zexp, a.vexp + b.vexp}] += a.coef * b.coef;
    SkeinPolynomial p;
    for (const auto& [e, c] : acc)
        if (c != 0)
            p.terms_.push_back(
                {static_cast<int16_t>(e.first), static_cast<int16_t>(e.second), c});
    return p;
}

SkeinPolynomial SkeinPolynomial::mirror() const {
    SkeinPolynomial p;
    p.terms_ = terms_;
    for (Term& t : p.terms_) {
        t.vexp = -t.vexp;
        if (t.zexp & 1) t.coef = -t.coef;
    }
    std::sort(p.terms_.begin(), p.terms_.end());
    return p;
}

SkeinPolynomial SkeinPolynomial::mirror_canonical() const {
    SkeinPolynomial m = mirror();
    return m < *this ? m : *this;
}

SkeinPolynomial SkeinPolynomial::pow(int k) const {
    SkeinPolynomial r = one();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

int64_t SkeinPolynomial::determinant() const {
    int64_t v = 0;
    for (const Term& t : terms_) {
        if (t.zexp < 0 || (t.zexp & 1))
            throw Error("determinant: value is not a single-component invariant");
        int64_t f = 1;
        for (int i = 0; i < t.zexp / 2; ++i) f *= -4;
        v += t.coef * f;
    }
    return v < 0 ? -v : v;
}

std::string SkeinPolynomial::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        int64_t c = t.coef;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        std::string mono;
        if (t.vexp != 0) {
            mono += 'v';
            if (t.vexp != 1) {
                mono += '^';
                mono += std::to_string(t.vexp);
            }
        }
        if (t.zexp != 0) {
            if (!mono.empty()) mono += ' ';
            mono += 'z';
            if (t.zexp != 1) {
                mono += '^';
                mono += std::to_string(t.zexp);
            }
        }
        if (c != 1 || mono.empty()) os << c;
        os << mono;
        first = false;
    }
    return os.str();
}

}  // namespace knotlineage
