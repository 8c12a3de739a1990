#include "jtsnf/intpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace jtsnf {

IntPoly::IntPoly(long v) {
    if (v != 0) c_.push_back(BigInt(v));
}

IntPoly::IntPoly(BigInt v) {
    if (!jtsnf::is_zero(v)) c_.push_back(std::move(v));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(int deg, BigInt coef) {
    IntPoly p;
    if (!jtsnf::is_zero(coef)) {
        p.c_.assign(static_cast<size_t>(deg) + 1, BigInt(0));
        p.c_.back() = std::move(coef);
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && jtsnf::is_zero(c_.back())) c_.pop_back();
}

const BigInt& IntPoly::lc() const {
    static const BigInt zero(0);
    return c_.empty() ? zero : c_.back();
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return BigInt(0);
    return c_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (jtsnf::is_zero(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& x : c_) {
        g = ::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    IntPoly r(*this);
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    IntPoly rem(a);
    IntPoly quot;
    quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        BigInt qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), rem.lc().get_mpz_t(), b.lc().get_mpz_t());
        if (!jtsnf::is_zero(rr)) throw std::domain_error("inexact polynomial division");
        int shift = rem.degree() - b.degree();
        quot.c_[static_cast<size_t>(shift)] = qq;
        for (size_t i = 0; i < b.c_.size(); ++i)
            rem.c_[i + static_cast<size_t>(shift)] -= qq * b.c_[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    quot.trim();
    return quot;
}

bool IntPoly::divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    try {
        (void)divexact(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    int steps = a.degree() - db + 1;
    std::vector<BigInt> ac = a.coeffs();
    const std::vector<BigInt>& bc = b.coeffs();
    while (static_cast<int>(ac.size()) - 1 >= db && steps > 0) {
        BigInt lead = ac.back();
        size_t shift = ac.size() - 1 - static_cast<size_t>(db);
        for (auto& x : ac) x *= b.lc();
        for (size_t i = 0; i < bc.size(); ++i) ac[i + shift] -= lead * bc[i];
        while (!ac.empty() && jtsnf::is_zero(ac.back())) ac.pop_back();
        --steps;
    }
    // apply any leftover lc(b) powers so the result matches the textbook definition
    for (; steps > 0; --steps)
        for (auto& x : ac) x *= b.lc();
    return IntPoly(std::move(ac));
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    auto normalize = [](IntPoly p) {
        if (!p.is_zero() && sgn(p.lc()) < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);

    BigInt c = ::gcd(a.content(), b.content());
    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);

    // Subresultant polynomial remainder sequence on the primitive parts.
    BigInt g(1), h(1);
    while (true) {
        int d = A.degree() - B.degree();
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero()) break;
        if (R.degree() == 0) {
            B = IntPoly(1);
            break;
        }
        A = std::move(B);
        BigInt divisor = g;
        for (int i = 0; i < d; ++i) divisor *= h;
        B = R;
        for (auto& x : B.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
        g = abs(A.lc());
        if (d > 0) {
            // h <- g^d / h^(d-1)
            BigInt num(1);
            for (int i = 0; i < d; ++i) num *= g;
            BigInt den(1);
            for (int i = 0; i + 1 < d; ++i) den *= h;
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    IntPoly result = B.primitive_part();
    if (sgn(result.lc()) < 0) result = -result;
    for (auto& x : result.c_) x *= c;
    return result;
}

IntPoly IntPoly::lcm(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly l = divexact(a * b, gcd(a, b));
    if (sgn(l.lc()) < 0) l = -l;
    return l;
}

std::string IntPoly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& ck = c_[static_cast<size_t>(k)];
        if (jtsnf::is_zero(ck)) continue;
        BigInt mag = abs(ck);
        if (first) {
            if (sgn(ck) < 0) os << '-';
            first = false;
        } else {
            os << (sgn(ck) < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str() << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

}  // namespace jtsnf
