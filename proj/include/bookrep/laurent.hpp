#pragma once
// Laurent polynomials in one variable A over the integers. Exact arithmetic,
// no zero coefficients stored. Small enough here (bracket of <= 9 crossings)
// that int64 coefficients have huge headroom.

#include <cstdint>
#include <map>
#include <string>

namespace bookrep {

struct LaurentPoly {
    std::map<int, int64_t> c;  // exponent -> nonzero coefficient

    LaurentPoly() = default;

    static LaurentPoly mono(int64_t coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.c[exp] = coeff;
        return p;
    }

    bool zero() const { return c.empty(); }
    int64_t coeff(int exp) const {
        auto it = c.find(exp);
        return it == c.end() ? 0 : it->second;
    }

    void add(int exp, int64_t k) {
        if (k == 0) return;
        auto [it, fresh] = c.try_emplace(exp, 0);
        it->second += k;
        if (it->second == 0) c.erase(it);
        (void)fresh;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto [e, k] : o.c) add(e, k);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto [e, k] : o.c) add(e, -k);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
    friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
    friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
        LaurentPoly out;
        for (auto [e1, k1] : l.c)
            for (auto [e2, k2] : r.c) out.add(e1 + e2, k1 * k2);
        return out;
    }
    friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) { return l.c == r.c; }
    friend bool operator!=(const LaurentPoly& l, const LaurentPoly& r) { return !(l == r); }

    // substitution A -> A^-1 (the bracket of the mirror diagram)
    LaurentPoly bar() const {
        LaurentPoly out;
        for (auto [e, k] : c) out.c[-e] = k;
        return out;
    }

    // "A^8 - A^4 + 1 - A^-4 + A^-8", descending exponents
    std::string str() const {
        if (c.empty()) return "0";
        std::string out;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            auto [e, k] = *it;
            if (out.empty())
                out += k < 0 ? "-" : "";
            else
                out += k < 0 ? " - " : " + ";
            int64_t a = k < 0 ? -k : k;
            if (a != 1 || e == 0) out += std::to_string(a);
            if (e != 0) {
                out += "A";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }
};

}  // namespace bookrep
