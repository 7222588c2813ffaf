#pragma once

#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Exact arithmetic in graded-commutative polynomial rings over GF(2) with
// per-generator truncation relations (g^(n+1) = 0) and optional monomial
// rewrite rules (used by projective bundles for the tautological relation).
//
// Conventions:
//   - coefficients live in GF(2); a polynomial is a set of monomials
//   - truncation n means g^(n+1) = 0; n = 0 means no bound
//   - arithmetic reduces truncations eagerly; rewrite rules are applied by
//     reduce(), so a class can be held in pre-rewrite form (the pushforward
//     formula needs that form)

namespace charnum {

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

struct GeneratorSpec {
    std::string name;
    int degree = 1;
    int truncation = 0;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Exponent vector aligned with the owning ring's generator list.
struct Monomial {
    std::vector<int> exps;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// lhs -> sum of rhs monomials. lhs must be a positive pure power of a single
// generator and every rhs monomial must carry a strictly smaller exponent of
// that generator, so reduction terminates.
struct RewriteRule {
    Monomial lhs;
    std::vector<Monomial> rhs;

    friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

class RingSpec {
public:
    static RingPtr make(std::vector<GeneratorSpec> generators,
                        std::vector<RewriteRule> rules = {});

    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    int index_of(std::string_view name) const;       // -1 when absent
    int require_index(std::string_view name) const;  // throws std::invalid_argument

    int degree_of(const Monomial& m) const;
    bool within_truncation(const Monomial& m) const;

    Monomial unit_monomial() const;
    Monomial monomial(std::initializer_list<std::pair<std::string_view, int>> factors) const;

    // Structural equality: same generators and same rules.
    static bool same(const RingSpec& a, const RingSpec& b);

    // Canonicalize a raw term list: drop truncation violators, cancel GF(2)
    // pairs, sort graded-lex. apply_rules additionally rewrites to normal form.
    std::vector<Monomial> canonical_terms(std::vector<Monomial> terms, bool apply_rules) const;

private:
    RingSpec(std::vector<GeneratorSpec> g, std::vector<RewriteRule> r);

    std::vector<GeneratorSpec> gens_;
    std::vector<RewriteRule> rules_;
    std::vector<int> rule_gen_indices_;
};

class ClassPoly {
public:
    ClassPoly() = default;

    static ClassPoly zero(RingPtr ring);
    static ClassPoly one(const RingPtr& ring);
    static ClassPoly gen(const RingPtr& ring, std::string_view name, int exp = 1);
    static ClassPoly make(RingPtr ring, std::vector<Monomial> terms);

    const RingPtr& ring() const { return ring_; }
    std::span<const Monomial> terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool has_unit_constant_term() const;
    int max_degree() const;  // -1 for the zero class

    std::string str() const;

    friend bool operator==(const ClassPoly& a, const ClassPoly& b);
    friend ClassPoly operator+(const ClassPoly& a, const ClassPoly& b);
    friend ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);

private:
    RingPtr ring_;
    std::vector<Monomial> terms_;
};

// Full normal form: truncations plus rewrite rules. Idempotent.
ClassPoly reduce(const ClassPoly& p);

ClassPoly pow(const ClassPoly& p, long n);

// Inverse of a class with constant term 1, computed degree by degree up to
// max_degree. Throws std::domain_error on a non-unit.
ClassPoly invert(const ClassPoly& p, int max_degree);

ClassPoly graded_part(const ClassPoly& p, int degree);
ClassPoly truncate_above(const ClassPoly& p, int max_degree);

// C(n, r) mod 2 by the digitwise rule: odd iff every base-2 digit of r is
// <= the corresponding digit of n.
int lucas(unsigned long long n, unsigned long long r);

// (1+g)^(-m) up to max_degree for a degree-1 generator g:
// sum_j C(m-1+j, j) g^j with mod-2 coefficients.
ClassPoly neg_pow_expand(const RingPtr& ring, std::string_view gen_name, long m, int max_degree);

}  // namespace charnum
