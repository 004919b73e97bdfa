#include "runpaths/polyseq.hpp"

#include <sstream>

#include "runpaths/euler.hpp"

namespace runpaths::polyseq {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::binomial(long shift, long k) {
    if (k < 0) throw std::invalid_argument("Polynomial::binomial: k must be >= 0");
    Polynomial result(Rat(1));
    for (long j = 0; j < k; ++j) {
        // multiply by (x + shift - j) / (j + 1)
        Polynomial linear(std::vector<Rat>{Rat(shift - j), Rat(1)});
        result = result * linear * make_rat(Int(1), Int(j + 1));
    }
    return result;
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

Int Polynomial::eval_int(long x) const { return to_int(eval(Rat(x))); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rat> out(coeffs_);
    for (Rat& c : out) c = -c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rat& s) const {
    if (s == 0) return Polynomial();
    std::vector<Rat> out(coeffs_);
    for (Rat& c : out) c *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(long a) const {
    // Horner in (x + a)
    Polynomial linear(std::vector<Rat>{Rat(a), Rat(1)});
    Polynomial acc;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * linear + Polynomial(coeffs_[i]);
    }
    return acc;
}

Polynomial Polynomial::divide_by_linear(const Rat& root) const {
    if (is_zero()) return Polynomial();
    std::vector<Rat> quotient(coeffs_.size() - 1, Rat(0));
    Rat carry(0);
    for (size_t i = coeffs_.size(); i-- > 1;) {
        carry = coeffs_[i] + carry * root;
        quotient[i - 1] = carry;
    }
    Rat remainder = coeffs_[0] + carry * root;
    if (remainder != 0)
        throw std::logic_error("divide_by_linear: nonzero remainder " +
                               rat_to_string(remainder));
    return Polynomial(std::move(quotient));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rat a = abs(c);
        if (i == 0 || a != 1) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Polynomial discrete_antidifference(const Polynomial& g) {
    if (g.is_zero()) return Polynomial();
    long d = g.degree();
    // forward differences of g at 0: g(x) = sum_k diff[k] binom(x, k)
    std::vector<Rat> diff(static_cast<size_t>(d) + 1);
    for (long j = 0; j <= d; ++j) diff[static_cast<size_t>(j)] = g.eval(Rat(j));
    for (long level = 1; level <= d; ++level)
        for (long j = d; j >= level; --j)
            diff[static_cast<size_t>(j)] -= diff[static_cast<size_t>(j - 1)];

    // antidifference of binom(x, k) is binom(x+1, k+1); fix f(0) = 0
    Polynomial f;
    Polynomial basis = Polynomial::binomial(1, 1);  // binom(x+1, 1)
    for (long k = 0; k <= d; ++k) {
        f = f + basis * diff[static_cast<size_t>(k)];
        // binom(x+1, k+2) = binom(x+1, k+1) * (x - k) / (k + 2)
        Polynomial linear(std::vector<Rat>{Rat(-k), Rat(1)});
        basis = basis * linear * make_rat(Int(1), Int(k + 2));
    }
    return f - Polynomial(Rat(diff[0]));
}

Polynomial basic_poly(long n, int r) {
    if (n < 0) throw std::invalid_argument("basic_poly: n must be >= 0");
    if (r < 2) throw std::invalid_argument("basic_poly: r must be >= 2");
    Polynomial sum;
    for (long i = 0; i <= n / r; ++i) {
        Polynomial term =
            Polynomial::binomial(0, i) * Polynomial::binomial(n - r * i - 1, n - r * i);
        if (i % 2 == 0)
            sum = sum + term;
        else
            sum = sum - term;
    }
    return sum;
}

Polynomial s_poly(long n, int r) {
    if (n < 0) throw std::invalid_argument("s_poly: n must be >= 0");
    if (r < 2) throw std::invalid_argument("s_poly: r must be >= 2");
    if (n == 0) return Polynomial(Rat(1));
    // (x - n + 1) b_n(x + 1) has the removable factor (x + 1)
    Polynomial numer =
        basic_poly(n, r).shifted(1) * Polynomial(std::vector<Rat>{Rat(1 - n), Rat(1)});
    return numer.divide_by_linear(Rat(-1));
}

namespace {

long p_zero_position(long n, int r) {
    // staircase zero: p_n vanishes at ceil(n/(r-2)) - 1 for n >= 1
    return (n + r - 3) / (r - 2) - 1;
}

}  // namespace

PolyFamily::PolyFamily(FamilyKind kind, int r, long alpha)
    : kind_(kind), r_(r), alpha_(alpha) {
    if (r < 2) throw std::invalid_argument("PolyFamily: r must be >= 2");
    if (kind == FamilyKind::P && r < 3) throw std::invalid_argument("PolyFamily: P needs r >= 3");
    if (kind == FamilyKind::Q && alpha < 0)
        throw std::invalid_argument("PolyFamily: Q needs alpha >= 0");
}

const Polynomial& PolyFamily::member(long n) {
    if (n < 0) throw std::invalid_argument("PolyFamily::member: n must be >= 0");
    while (static_cast<long>(members_.size()) <= n) {
        long k = static_cast<long>(members_.size());
        switch (kind_) {
            case FamilyKind::Basic:
                members_.push_back(basic_poly(k, r_));
                break;
            case FamilyKind::S:
                members_.push_back(s_poly(k, r_));
                break;
            case FamilyKind::P: {
                if (k == 0) {
                    members_.push_back(Polynomial(Rat(1)));
                    break;
                }
                Polynomial rhs = members_[static_cast<size_t>(k - 1)];
                if (k - r_ >= 0) rhs = rhs - members_[static_cast<size_t>(k - r_)].shifted(-1);
                Polynomial f = discrete_antidifference(rhs);
                Rat at_zero = f.eval(Rat(p_zero_position(k, r_)));
                members_.push_back(f - Polynomial(at_zero));
                break;
            }
            case FamilyKind::Q: {
                if (k <= alpha_) {
                    members_.push_back(basic_poly(k, r_));
                    break;
                }
                Polynomial rhs = members_[static_cast<size_t>(k - 1)];
                if (k - r_ >= 0) rhs = rhs - members_[static_cast<size_t>(k - r_)].shifted(-1);
                Polynomial f = discrete_antidifference(rhs);
                Rat at_zero = f.eval(Rat(k - alpha_ - 1));
                members_.push_back(f - Polynomial(at_zero));
                break;
            }
        }
    }
    return members_[static_cast<size_t>(n)];
}

Polynomial p_poly(long n, int r) {
    PolyFamily fam(FamilyKind::P, r);
    return fam.member(n);
}

Polynomial q_poly(long n, long alpha, int r) {
    PolyFamily fam(FamilyKind::Q, r, alpha);
    return fam.member(n);
}

CheckReport sheffer_binomial_check(FamilyKind family, int r, long alpha, long n_max,
                                   const std::vector<std::pair<long, long>>& points) {
    if (family != FamilyKind::S && family != FamilyKind::Q)
        throw std::invalid_argument("sheffer_binomial_check: family must be S or Q");
    CheckReport rep;
    rep.name = (family == FamilyKind::S) ? "sheffer-binomial-S" : "sheffer-binomial-Q";
    PolyFamily fam(family, r, alpha);
    PolyFamily basic(FamilyKind::Basic, r);
    for (long n = 0; n <= n_max; ++n) {
        for (auto [x, y] : points) {
            Rat lhs = fam.member(n).eval(Rat(x + y));
            Rat rhs(0);
            for (long i = 0; i <= n; ++i)
                rhs += fam.member(i).eval(Rat(y)) * basic.member(n - i).eval(Rat(x));
            ++rep.checks_run;
            if (lhs != rhs) {
                std::ostringstream os;
                os << "n=" << n << " x=" << x << " y=" << y << " r=" << r;
                if (family == FamilyKind::Q) os << " alpha=" << alpha;
                rep.fail("sheffer binomial theorem", os.str(),
                         "lhs=" + rat_to_string(lhs) + " rhs=" + rat_to_string(rhs));
            }
        }
    }
    return rep;
}

CheckReport operator_identity_check(int r, long n_max) {
    CheckReport rep;
    rep.name = "operator-identity";
    PolyFamily basic(FamilyKind::Basic, r);
    for (long n = 0; n <= n_max; ++n) {
        Polynomial lhs = basic.member(n).shifted(1);
        Polynomial rhs;
        for (long i = 0; i < r && i <= n; ++i) rhs = rhs + basic.member(n - i);
        ++rep.checks_run;
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "n=" << n << " r=" << r;
            rep.fail("E^1 = sum of B^i on basic sequence", os.str(),
                     "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string());
        }
    }
    return rep;
}

CheckReport abelization_check(int r, long n_max, long x_min, long x_max, long y_min,
                              long y_max) {
    CheckReport rep;
    rep.name = "abelization";
    PolyFamily basic(FamilyKind::Basic, r);
    for (long n = 0; n <= n_max; ++n) {
        for (long x = x_min; x <= x_max; ++x) {
            bool singular = false;
            for (long i = 0; i <= n; ++i)
                if (x + (n - i) == 0) singular = true;
            if (singular) continue;
            for (long y = y_min; y <= y_max; ++y) {
                Rat lhs = basic.member(n).eval(Rat(y + x + n));
                Rat rhs(0);
                for (long i = 0; i <= n; ++i) {
                    Rat factor = make_rat(Int(x), Int(x + n - i));
                    rhs += basic.member(i).eval(Rat(y + i)) * factor *
                           basic.member(n - i).eval(Rat(x + n - i));
                }
                ++rep.checks_run;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "n=" << n << " x=" << x << " y=" << y << " r=" << r;
                    rep.fail("abelized convolution", os.str(),
                             "lhs=" + rat_to_string(lhs) + " rhs=" + rat_to_string(rhs));
                }
            }
        }
    }
    return rep;
}

}  // namespace runpaths::polyseq
