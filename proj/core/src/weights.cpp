#include "cech23/weights.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <sstream>

namespace cech23 {

std::string Weight::str() const {
    std::ostringstream os;
    for (int i = 0; i < 5; ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::optional<Weight> Weight::parse(std::string_view s) {
    Weight w;
    int idx = 0;
    const char* p = s.data();
    const char* end = s.data() + s.size();
    while (idx < 5) {
        std::int64_t val = 0;
        auto [next, ec] = std::from_chars(p, end, val);
        if (ec != std::errc{}) return std::nullopt;
        w.v[idx++] = val;
        p = next;
        if (idx < 5) {
            if (p == end || *p != ',') return std::nullopt;
            ++p;
        }
    }
    if (p != end) return std::nullopt;
    return w;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            std::int32_t a = at(i, j);
            if (!a) continue;
            if (any) os << '*';
            os << 'X' << (i + 1) << (j + 1);
            if (a != 1) os << '^' << a;
            any = true;
        }
    return any ? os.str() : "1";
}

Weight weight_of(const Monomial& m) {
    Weight w;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            std::int64_t a = m.at(i, j);
            w.v[static_cast<std::size_t>(i)] += a;
            w.v[static_cast<std::size_t>(2 + j)] += a;
        }
    return w;
}

std::vector<Monomial> enumerate_basis(const Weight& w) {
    std::vector<Monomial> out;
    if (!w.consistent()) return out;
    if (*std::min_element(w.v.begin(), w.v.end()) < 0) return out;
    const std::int64_t r1 = w.row(0), c1 = w.col(0), c2 = w.col(1), c3 = w.col(2);
    // first row determines the second; descending loops give LeadingFirst order
    for (std::int64_t a11 = std::min(r1, c1); a11 >= 0; --a11) {
        for (std::int64_t a12 = std::min(r1 - a11, c2); a12 >= 0; --a12) {
            std::int64_t a13 = r1 - a11 - a12;
            if (a13 > c3) break;  // a13 only grows as a12 shrinks
            Monomial m;
            m.at(0, 0) = static_cast<std::int32_t>(a11);
            m.at(0, 1) = static_cast<std::int32_t>(a12);
            m.at(0, 2) = static_cast<std::int32_t>(a13);
            m.at(1, 0) = static_cast<std::int32_t>(c1 - a11);
            m.at(1, 1) = static_cast<std::int32_t>(c2 - a12);
            m.at(1, 2) = static_cast<std::int32_t>(c3 - a13);
            out.push_back(m);
        }
    }
    return out;
}

std::size_t weight_dim(const Weight& w) {
    if (!w.consistent()) return 0;
    if (*std::min_element(w.v.begin(), w.v.end()) < 0) return 0;
    const std::int64_t r1 = w.row(0), c1 = w.col(0), c2 = w.col(1), c3 = w.col(2);
    std::size_t count = 0;
    for (std::int64_t a11 = std::min(r1, c1); a11 >= 0; --a11) {
        std::int64_t hi = std::min(r1 - a11, c2);
        std::int64_t lo = std::max<std::int64_t>(0, r1 - a11 - c3);
        if (hi >= lo) count += static_cast<std::size_t>(hi - lo + 1);
    }
    return count;
}

std::size_t basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m, LeadingFirst{});
    assert(it != basis.end() && *it == m && "monomial not in basis");
    return static_cast<std::size_t>(it - basis.begin());
}

Weight generator_weight(int i) {
    assert(i >= 1 && i <= 3);
    Weight w = Weight::of(1, 1, 1, 1, 1);
    w.v[static_cast<std::size_t>(1 + i)] = 0;
    return w;
}

Weight product_weight() { return Weight::of(3, 3, 2, 2, 2); }

}  // namespace cech23
