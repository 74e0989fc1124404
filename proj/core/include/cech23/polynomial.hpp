#pragma once

// Sparse polynomials in the six variables X11..X23 over an exact domain, the
// three 2x2 minor generators, and multiplication matrices between weight
// slices.

#include <map>
#include <sstream>
#include <stdexcept>

#include "cech23/matrix.hpp"
#include "cech23/weights.hpp"

namespace cech23 {

template <class T>
class Polynomial {
  public:
    explicit Polynomial(CoeffDomain dom) : dom_(dom) {}
    Polynomial()
        requires(!std::is_same_v<T, Fp>)
        : dom_(default_domain<T>::value()) {}

    const CoeffDomain& domain() const { return dom_; }
    const std::map<Monomial, T, LeadingFirst>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const T& c) {
        if (cech23::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (cech23::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_domain(o);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        require_same_domain(o);
        Polynomial r(dom_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
        return r;
    }

    Polynomial scale(const T& c) const {
        Polynomial r(dom_);
        for (const auto& [m, cm] : terms_) r.add_term(m, cm * c);
        return r;
    }

    Polynomial pow(unsigned n) const {
        Polynomial r = one(dom_);
        for (unsigned i = 0; i < n; ++i) r = r * (*this);
        return r;
    }

    static Polynomial one(CoeffDomain dom) {
        Polynomial r(dom);
        r.add_term(Monomial{}, scalar_from<T>(dom, 1));
        return r;
    }

    // weight shared by every term; nullopt for 0 or inhomogeneous input
    std::optional<Weight> homogeneous_weight() const {
        std::optional<Weight> w;
        for (const auto& [m, c] : terms_) {
            Weight wm = weight_of(m);
            if (!w)
                w = wm;
            else if (*w != wm)
                return std::nullopt;
        }
        return w;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = scalar_str(c);
            if (!first) os << ' ';
            first = false;
            if (!cs.empty() && cs[0] == '-') {
                os << '-';
                cs.erase(0, 1);
            } else {
                os << '+';
            }
            os << cs << '*' << m.str();
        }
        return os.str();
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  private:
    void require_same_domain(const Polynomial& o) const {
        if (dom_ != o.dom_) throw std::invalid_argument("Polynomial: domain mismatch");
    }

    std::map<Monomial, T, LeadingFirst> terms_;
    CoeffDomain dom_;
};

namespace detail {
inline Monomial mono(int i1, int j1, int i2, int j2) {
    Monomial m;
    m.at(i1, j1) += 1;
    m.at(i2, j2) += 1;
    return m;
}
}  // namespace detail

// f1 = X12*X23 - X13*X22, f2 = X13*X21 - X11*X23, f3 = X11*X22 - X12*X21:
// the 2x2 minor dropping column i, signed so that X11*f1 + X12*f2 + X13*f3 = 0
template <class T>
Polynomial<T> minor_generator(int i, CoeffDomain dom) {
    Polynomial<T> f(dom);
    T plus = scalar_from<T>(dom, 1), minus = scalar_from<T>(dom, -1);
    switch (i) {
    case 1:
        f.add_term(detail::mono(0, 1, 1, 2), plus);
        f.add_term(detail::mono(0, 2, 1, 1), minus);
        break;
    case 2:
        f.add_term(detail::mono(0, 2, 1, 0), plus);
        f.add_term(detail::mono(0, 0, 1, 2), minus);
        break;
    case 3:
        f.add_term(detail::mono(0, 0, 1, 1), plus);
        f.add_term(detail::mono(0, 1, 1, 0), minus);
        break;
    default:
        throw std::invalid_argument("minor_generator: index must be 1..3");
    }
    return f;
}

template <class T>
std::array<Polynomial<T>, 3> minor_generators(CoeffDomain dom) {
    return {minor_generator<T>(1, dom), minor_generator<T>(2, dom), minor_generator<T>(3, dom)};
}

// matrix of multiplication by homogeneous g from the slice of weight w to the
// slice of weight w + wt(g), both in LeadingFirst order; shape
// weight_dim(w + wt(g)) x weight_dim(w)
template <class T>
Matrix<T> multiplication_matrix(const Polynomial<T>& g, const Weight& w) {
    std::optional<Weight> gw = g.homogeneous_weight();
    if (!gw) throw std::invalid_argument("multiplication_matrix: g must be homogeneous, nonzero");
    std::vector<Monomial> src = enumerate_basis(w);
    std::vector<Monomial> tgt = enumerate_basis(w + *gw);
    Matrix<T> mat(tgt.size(), src.size(), g.domain());
    for (std::size_t j = 0; j < src.size(); ++j)
        for (const auto& [gm, gc] : g.terms()) mat(basis_index(tgt, gm + src[j]), j) = gc;
    return mat;
}

}  // namespace cech23
