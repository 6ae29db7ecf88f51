#pragma once

// Cocharacter lattices with an integral bilinear form, the associated
// quadratic form phi(m) = I(m,m)/2, and signed-permutation Weyl actions.
// Lattices are built from blocks so direct sums (products of theta
// functions) keep their blockwise membership predicates and groups.

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "sigmaor/jet.hpp"

namespace sigmaor {

using Cocharacter = Eigen::VectorXi;

enum class Membership { All, EvenSum };
enum class GroupKind { SignedPermEven, Permutations, FullSigned, Trivial };

struct LatticeBlock {
    int rank;
    Membership membership;
    GroupKind group;
};

/// w acting on Z^d by x_i -> sign[i] * x_{perm[i]}.
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> sign;

    static SignedPermutation identity(int d);
    int rank() const { return int(perm.size()); }
    bool is_identity() const;

    Cocharacter apply(const Cocharacter& m) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& z) const;
    std::vector<Jet> apply(const std::vector<Jet>& roots) const;
};

class LatticeWithForm {
  public:
    /// Cocharacter lattice of Spin(2d): integer vectors with even
    /// coordinate sum, gram = identity, Weyl group = signed permutations
    /// with an even number of sign changes.
    static LatticeWithForm spin(int two_d);
    /// Torus/U(d) preset: all of Z^d with a user gram matrix, group S_d.
    static LatticeWithForm torus(const Eigen::MatrixXi& gram);
    static LatticeWithForm direct_sum(const LatticeWithForm& a, const LatticeWithForm& b);

    int rank() const { return int(gram_.rows()); }
    const Eigen::MatrixXi& gram() const { return gram_; }
    const std::vector<LatticeBlock>& blocks() const { return blocks_; }

    bool contains(const Cocharacter& m) const;
    void require_member(const Cocharacter& m) const;

    long long phi(const Cocharacter& m) const;        // I(m,m)/2, member only
    long long phi_twice(const Cocharacter& m) const;  // m^T gram m, no membership check
    long long pairing(const Cocharacter& a, const Cocharacter& b) const;
    Eigen::VectorXi adjoint(const Cocharacter& m) const;  // Ihat(m) = gram * m
    long long phi_mod(const Cocharacter& m, long long n) const;

    SignedPermutation random_element(std::mt19937_64& rng) const;
    std::vector<SignedPermutation> enumerate_group(std::size_t max_size = 200000) const;

    /// Elements w with w m = m (rejection sampling, exhaustive fallback).
    std::vector<SignedPermutation> stabilizer_sample(const Cocharacter& m, std::mt19937_64& rng,
                                                     int count) const;
    /// Elements w with w m = m + n*Delta for a lattice member Delta, i.e. the
    /// stabilizer of the induced map Z/n -> T.
    std::vector<SignedPermutation> stabilizer_mod_sample(const Cocharacter& m, long long n,
                                                         std::mt19937_64& rng, int count) const;

    /// Random member with entries in [-max_entry, max_entry].
    Cocharacter random_member(std::mt19937_64& rng, int max_entry) const;

    bool operator==(const LatticeWithForm& o) const;

  private:
    LatticeWithForm(std::vector<LatticeBlock> blocks, Eigen::MatrixXi gram);
    std::vector<LatticeBlock> blocks_;
    Eigen::MatrixXi gram_;
};

/// The Borel expansion of the degree-four class on split toy data:
/// (1/2) (m z + x)^T gram (m z + x), an identity in jets of degree <= 2
/// when z is adjoined as one more nilpotent variable.
Jet borel_c2(const LatticeWithForm& L, const Cocharacter& m, const std::vector<Jet>& roots,
             const Jet& z);

}  // namespace sigmaor
