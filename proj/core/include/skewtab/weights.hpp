#pragma once

#include <map>
#include <string>
#include <vector>

namespace skewtab {

enum class Kind { A, B, D };

char kind_char(Kind k);

// Weights live in fundamental-weight coordinates: mu = sum m_i omega_i.
using Weight = std::vector<int>;

struct RootData {
    Kind kind = Kind::A;
    int rank = 0;
    std::vector<std::vector<int>> cartan;            // a_ij = <alpha_i, alpha_j^vee>
    std::vector<std::vector<int>> positive_coroots;  // coefficients in alpha_j^vee
    std::vector<int> rho_pairings;                   // <rho, beta^vee>
};

RootData root_data(Kind kind, int rank);

// <mu, beta^vee> for beta^vee = sum k_j alpha_j^vee
long long pairing(const Weight& mu, const std::vector<int>& coroot);
// 2<mu, rho^vee>; always an integer
long long two_rho_pairing(const RootData& rd, const Weight& mu);
bool is_dominant(const Weight& mu);

class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<long long> c);
    static QPoly monomial(int deg, long long c = 1);
    static QPoly q_int(int m);  // [m]_q = 1 + q + ... + q^{m-1}

    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long at_one() const;
    long long coeff(int d) const { return d >= 0 && d < (int)c_.size() ? c_[d] : 0; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    // throws InvariantError on a nonzero remainder
    QPoly exact_div(const QPoly& d) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void trim();
    std::vector<long long> c_;
};

struct PolyProps {
    bool symmetric = false;
    bool unimodal = false;
};
PolyProps poly_props(const QPoly& p);

class LaurentPoly {
  public:
    using Terms = std::map<std::vector<int>, long long>;

    LaurentPoly() = default;
    static LaurentPoly monomial(const Weight& mu, long long c = 1);
    static LaurentPoly one(int rank);

    const Terms& terms() const { return t_; }
    void add_term(const Weight& mu, long long c);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    long long at_one() const;
    bool empty() const { return t_.empty(); }

    // Z^mu -> Z^{f(mu)}
    template <class F>
    LaurentPoly map_exponents(F f) const {
        LaurentPoly r;
        for (const auto& [mu, c] : t_) r.add_term(f(mu), c);
        return r;
    }

    std::string str() const;

  private:
    Terms t_;
};

LaurentPoly reflect(const LaurentPoly& p, int i, const RootData& rd);
Weight reflect_weight(const Weight& mu, int i, const RootData& rd);

// sum c q^{<mu + lambda, rho^vee>}
QPoly to_qpoly(const LaurentPoly& p, const RootData& rd, const Weight& lambda);

// prod [nums_k]_q / prod [dens_k]_q, exact
QPoly q_ratio(const std::vector<int>& nums, const std::vector<int>& dens);

QPoly dynkin_poly(const RootData& rd, const Weight& lambda);
QPoly rgf_from_decomposition(const RootData& rd, const std::vector<Weight>& lambdas,
                             const Weight& lambda_top);

struct CardLength {
    QPoly rgf;
    long long card = 0;
    long long length = 0;
};
// A_{n-1} with lambda of length n-1
CardLength rgf_card_length_typeA(const Weight& lambda);

}  // namespace skewtab
