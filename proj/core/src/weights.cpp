#include "skewtab/weights.hpp"
#include "skewtab/rational.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

#include <gmpxx.h>

#include "skewtab/errors.hpp"

namespace skewtab {

char kind_char(Kind k) {
    switch (k) {
        case Kind::A: return 'A';
        case Kind::B: return 'B';
        case Kind::D: return 'D';
    }
    return '?';
}

namespace {

std::vector<std::vector<int>> make_cartan(Kind kind, int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (kind) {
        case Kind::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Kind::B:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            // alpha_n short
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
            break;
        case Kind::D:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
    }
    return a;
}

std::vector<std::vector<int>> coroot_closure(const std::vector<std::vector<int>>& a) {
    int n = static_cast<int>(a.size());
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> todo;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        auto b = todo.front();
        todo.pop_front();
        for (int i = 0; i < n; ++i) {
            long long p = 0;
            for (int j = 0; j < n; ++j) p += static_cast<long long>(b[j]) * a[i][j];
            if (p == 0) continue;
            auto c = b;
            c[i] -= static_cast<int>(p);
            if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; })) continue;
            if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) continue;
            if (seen.insert(c).second) todo.push_back(c);
        }
    }
    return {seen.begin(), seen.end()};
}

long long mul_checked(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("QPoly coefficient overflow");
    return r;
}
long long add_checked(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("QPoly coefficient overflow");
    return r;
}

// Phi_d(q), d >= 1
QPoly cyclotomic(int d) {
    static std::recursive_mutex mu;
    static std::map<int, QPoly> cache;
    std::lock_guard<std::recursive_mutex> lk(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
    std::vector<long long> c(d + 1, 0);
    c[0] = -1;
    c[d] = 1;
    QPoly p(c);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = p.exact_div(cyclotomic(e));
    cache[d] = p;
    return p;
}

}  // namespace

// cyclotomic multiplicities keep intermediate coefficients small
QPoly q_ratio(const std::vector<int>& nums, const std::vector<int>& dens) {
    std::map<int, int> mult;
    for (int a : nums)
        for (int d = 2; d <= a; ++d)
            if (a % d == 0) ++mult[d];
    for (int b : dens)
        for (int d = 2; d <= b; ++d)
            if (b % d == 0) --mult[d];
    QPoly r = QPoly::monomial(0);
    for (auto [d, k] : mult) {
        if (k < 0) throw InvariantError("q-ratio is not a polynomial");
        for (int t = 0; t < k; ++t) r = r * cyclotomic(d);
    }
    return r;
}

RootData root_data(Kind kind, int rank) {
    int lo = kind == Kind::A ? 1 : kind == Kind::B ? 2 : 3;
    if (rank < lo)
        throw ConstraintError(std::string("unsupported root system ") + kind_char(kind) +
                              std::to_string(rank));
    RootData rd;
    rd.kind = kind;
    rd.rank = rank;
    rd.cartan = make_cartan(kind, rank);
    rd.positive_coroots = coroot_closure(rd.cartan);
    Weight rho(rank, 1);
    for (const auto& b : rd.positive_coroots) rd.rho_pairings.push_back(static_cast<int>(pairing(rho, b)));
    size_t expect = kind == Kind::A   ? rank * (rank + 1) / 2
                    : kind == Kind::B ? rank * rank
                                      : rank * (rank - 1);
    if (rd.positive_coroots.size() != expect) throw InvariantError("positive root count mismatch");
    return rd;
}

long long pairing(const Weight& mu, const std::vector<int>& coroot) {
    long long s = 0;
    for (size_t j = 0; j < coroot.size(); ++j) s += static_cast<long long>(coroot[j]) * mu.at(j);
    return s;
}

long long two_rho_pairing(const RootData& rd, const Weight& mu) {
    long long s = 0;
    for (const auto& b : rd.positive_coroots) s += pairing(mu, b);
    return s;
}

bool is_dominant(const Weight& mu) {
    return std::all_of(mu.begin(), mu.end(), [](int x) { return x >= 0; });
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<long long> c) : c_(std::move(c)) { trim(); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(int deg, long long c) {
    std::vector<long long> v(deg + 1, 0);
    v[deg] = c;
    return QPoly(v);
}

QPoly QPoly::q_int(int m) { return QPoly(std::vector<long long>(std::max(m, 0), 1)); }

long long QPoly::at_one() const {
    long long s = 0;
    for (auto x : c_) s = add_checked(s, x);
    return s;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = add_checked(r[i], o.c_[i]);
    return QPoly(r);
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<long long> neg(o.c_);
    for (auto& x : neg) x = -x;
    return *this + QPoly(neg);
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = add_checked(r[i + j], mul_checked(c_[i], o.c_[j]));
    return QPoly(r);
}

QPoly QPoly::exact_div(const QPoly& d) const {
    if (d.is_zero()) throw InvariantError("division by zero polynomial");
    if (is_zero()) return {};
    std::vector<long long> rem(c_);
    int dd = d.degree();
    long long lead = d.c_.back();
    if (degree() < dd) throw InvariantError("inexact polynomial division");
    std::vector<long long> quo(degree() - dd + 1, 0);
    for (int k = degree() - dd; k >= 0; --k) {
        long long top = rem[k + dd];
        if (top % lead != 0) throw InvariantError("inexact polynomial division");
        long long f = top / lead;
        quo[k] = f;
        for (int j = 0; j <= dd; ++j) rem[k + j] = add_checked(rem[k + j], -mul_checked(f, d.c_[j]));
    }
    for (auto x : rem)
        if (x != 0) throw InvariantError("inexact polynomial division");
    return QPoly(quo);
}

std::string QPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        long long c = c_[d];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        long long a = c < 0 ? -c : c;
        if (d == 0 || a != 1) os << a;
        if (d > 0) os << "q";
        if (d > 1) os << "^" << d;
        first = false;
    }
    return os.str();
}

PolyProps poly_props(const QPoly& p) {
    PolyProps r;
    const auto& c = p.coeffs();
    int l = p.degree();
    r.symmetric = true;
    for (int i = 0; i <= l; ++i)
        if (c[i] != c[l - i]) r.symmetric = false;
    // a_0 <= a_1 <= ... <= a_k >= ... >= a_l
    int i = 0;
    while (i < l && c[i] <= c[i + 1]) ++i;
    while (i < l && c[i] >= c[i + 1]) ++i;
    r.unimodal = i >= l;
    return r;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(const Weight& mu, long long c) {
    LaurentPoly p;
    p.add_term(mu, c);
    return p;
}

LaurentPoly LaurentPoly::one(int rank) { return monomial(Weight(rank, 0)); }

void LaurentPoly::add_term(const Weight& mu, long long c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(mu, c);
    if (!fresh) {
        it->second = add_checked(it->second, c);
        if (it->second == 0) t_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [mu, c] : o.t_) add_term(mu, c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [mu, c] : o.t_) r.add_term(mu, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [a, x] : t_)
        for (const auto& [b, y] : o.t_) {
            Weight s(a.size());
            for (size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b.at(k);
            r.add_term(s, mul_checked(x, y));
        }
    return r;
}

long long LaurentPoly::at_one() const {
    long long s = 0;
    for (const auto& [mu, c] : t_) s = add_checked(s, c);
    return s;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*Z(";
        for (size_t k = 0; k < mu.size(); ++k) os << (k ? "," : "") << mu[k];
        os << ")";
    }
    return os.str();
}

Weight reflect_weight(const Weight& mu, int i, const RootData& rd) {
    if (i < 1 || i > rd.rank) throw ConstraintError("reflection index out of range");
    Weight r = mu;
    int mi = mu.at(i - 1);
    for (int j = 0; j < rd.rank; ++j) r[j] -= mi * rd.cartan[i - 1][j];
    return r;
}

LaurentPoly reflect(const LaurentPoly& p, int i, const RootData& rd) {
    return p.map_exponents([&](const Weight& mu) { return reflect_weight(mu, i, rd); });
}

QPoly to_qpoly(const LaurentPoly& p, const RootData& rd, const Weight& lambda) {
    long long tl = two_rho_pairing(rd, lambda);
    std::map<long long, long long> acc;
    for (const auto& [mu, c] : p.terms()) {
        long long e = two_rho_pairing(rd, mu) + tl;
        if (e % 2 != 0 || e < 0) throw ConstraintError("weight not in the coset of lambda");
        acc[e / 2] = add_checked(acc[e / 2], c);
    }
    QPoly r;
    for (auto [d, c] : acc) r += QPoly::monomial(static_cast<int>(d), c);
    return r;
}

QPoly dynkin_poly(const RootData& rd, const Weight& lambda) {
    if (!is_dominant(lambda)) throw ConstraintError("dynkin_poly needs a dominant weight");
    std::vector<int> nums, dens;
    for (size_t k = 0; k < rd.positive_coroots.size(); ++k) {
        nums.push_back(static_cast<int>(pairing(lambda, rd.positive_coroots[k]) + rd.rho_pairings[k]));
        dens.push_back(rd.rho_pairings[k]);
    }
    QPoly r = q_ratio(nums, dens);
    if (r.degree() != two_rho_pairing(rd, lambda)) throw InvariantError("dynkin_poly degree mismatch");
    return r;
}

QPoly rgf_from_decomposition(const RootData& rd, const std::vector<Weight>& lambdas,
                             const Weight& lambda_top) {
    if (std::find(lambdas.begin(), lambdas.end(), lambda_top) == lambdas.end())
        throw ConstraintError("lambda_top not among the constituents");
    long long top = two_rho_pairing(rd, lambda_top);
    QPoly r;
    for (const auto& l : lambdas) {
        long long d = top - two_rho_pairing(rd, l);
        if (d < 0) throw ConstraintError("lambda_top is not maximal");
        if (d % 2 != 0) throw ConstraintError("constituents in different root-lattice cosets");
        r += QPoly::monomial(static_cast<int>(d / 2)) * dynkin_poly(rd, l);
    }
    return r;
}

CardLength rgf_card_length_typeA(const Weight& lambda) {
    if (!is_dominant(lambda)) throw ConstraintError("rgf_card_length_typeA needs a dominant weight");
    int n = static_cast<int>(lambda.size()) + 1;
    std::vector<int> nums, dens;
    mpq_class card = 1;
    long long length = 0;
    for (int i = 1; i <= n - 1; ++i) {
        int lij = 0;
        for (int j = i; j <= n - 1; ++j) {
            lij += lambda[j - 1];
            nums.push_back(lij + j + 1 - i);
            dens.push_back(j + 1 - i);
            card *= make_rational(lij + j + 1 - i, j + 1 - i);
            length += lij;
        }
    }
    card.canonicalize();
    if (card.get_den() != 1) throw InvariantError("non-integral cardinality");
    return {q_ratio(nums, dens), card.get_num().get_si(), length};
}

}  // namespace skewtab
