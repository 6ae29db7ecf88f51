#include "sigmaor/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace sigmaor {

SignedPermutation SignedPermutation::identity(int d) {
    SignedPermutation w;
    w.perm.resize(d);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.sign.assign(d, 1);
    return w;
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < rank(); ++i) {
        if (perm[i] != i || sign[i] != 1) return false;
    }
    return true;
}

Cocharacter SignedPermutation::apply(const Cocharacter& m) const {
    Cocharacter r(m.size());
    for (int i = 0; i < m.size(); ++i) r[i] = sign[i] * m[perm[i]];
    return r;
}

Eigen::VectorXcd SignedPermutation::apply(const Eigen::VectorXcd& z) const {
    Eigen::VectorXcd r(z.size());
    for (int i = 0; i < z.size(); ++i) r[i] = double(sign[i]) * z[perm[i]];
    return r;
}

std::vector<Jet> SignedPermutation::apply(const std::vector<Jet>& roots) const {
    std::vector<Jet> r;
    r.reserve(roots.size());
    for (int i = 0; i < rank(); ++i) {
        r.push_back(roots[perm[i]] * Complex(double(sign[i])));
    }
    return r;
}

LatticeWithForm::LatticeWithForm(std::vector<LatticeBlock> blocks, Eigen::MatrixXi gram)
    : blocks_(std::move(blocks)), gram_(std::move(gram)) {}

LatticeWithForm LatticeWithForm::spin(int two_d) {
    if (two_d <= 0 || two_d % 2 != 0) throw parameter_error("spin(2d): even positive rank required");
    const int d = two_d / 2;
    return LatticeWithForm({{d, Membership::EvenSum, GroupKind::SignedPermEven}},
                           Eigen::MatrixXi::Identity(d, d));
}

LatticeWithForm LatticeWithForm::torus(const Eigen::MatrixXi& gram) {
    if (gram.rows() != gram.cols() || gram != gram.transpose()) {
        throw parameter_error("torus(gram): symmetric square matrix required");
    }
    return LatticeWithForm({{int(gram.rows()), Membership::All, GroupKind::Permutations}}, gram);
}

LatticeWithForm LatticeWithForm::direct_sum(const LatticeWithForm& a, const LatticeWithForm& b) {
    std::vector<LatticeBlock> blocks = a.blocks_;
    blocks.insert(blocks.end(), b.blocks_.begin(), b.blocks_.end());
    Eigen::MatrixXi gram = Eigen::MatrixXi::Zero(a.rank() + b.rank(), a.rank() + b.rank());
    gram.topLeftCorner(a.rank(), a.rank()) = a.gram_;
    gram.bottomRightCorner(b.rank(), b.rank()) = b.gram_;
    return LatticeWithForm(std::move(blocks), std::move(gram));
}

bool LatticeWithForm::contains(const Cocharacter& m) const {
    if (m.size() != rank()) return false;
    int offset = 0;
    for (const auto& blk : blocks_) {
        if (blk.membership == Membership::EvenSum) {
            if (m.segment(offset, blk.rank).sum() % 2 != 0) return false;
        }
        offset += blk.rank;
    }
    return true;
}

void LatticeWithForm::require_member(const Cocharacter& m) const {
    if (!contains(m)) throw not_in_lattice("cocharacter fails the lattice membership predicate");
}

long long LatticeWithForm::phi_twice(const Cocharacter& m) const {
    return (m.cast<long long>().transpose() * gram_.cast<long long>() * m.cast<long long>())(0);
}

long long LatticeWithForm::phi(const Cocharacter& m) const {
    require_member(m);
    const long long twice = phi_twice(m);
    if (twice % 2 != 0) {
        throw not_in_lattice("phi is not integral on this vector; gram/membership mismatch");
    }
    return twice / 2;
}

long long LatticeWithForm::pairing(const Cocharacter& a, const Cocharacter& b) const {
    return (a.cast<long long>().transpose() * gram_.cast<long long>() * b.cast<long long>())(0);
}

Eigen::VectorXi LatticeWithForm::adjoint(const Cocharacter& m) const {
    return gram_ * m;
}

long long LatticeWithForm::phi_mod(const Cocharacter& m, long long n) const {
    if (n <= 0) throw parameter_error("phi_mod: n must be positive");
    long long r = phi(m) % n;
    return (r + n) % n;
}

SignedPermutation LatticeWithForm::random_element(std::mt19937_64& rng) const {
    SignedPermutation w;
    for (const auto& blk : blocks_) {
        std::vector<int> perm(blk.rank);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> sign(blk.rank, 1);
        switch (blk.group) {
            case GroupKind::Trivial:
                break;
            case GroupKind::Permutations:
                std::shuffle(perm.begin(), perm.end(), rng);
                break;
            case GroupKind::FullSigned:
            case GroupKind::SignedPermEven: {
                std::shuffle(perm.begin(), perm.end(), rng);
                int minus = 0;
                for (auto& s : sign) {
                    s = (rng() & 1) ? 1 : -1;
                    if (s < 0) ++minus;
                }
                if (blk.group == GroupKind::SignedPermEven && minus % 2 != 0) {
                    int i = int(rng() % blk.rank);
                    sign[i] = -sign[i];
                }
                break;
            }
        }
        const int offset = int(w.perm.size());
        for (int i = 0; i < blk.rank; ++i) {
            w.perm.push_back(offset + perm[i]);
            w.sign.push_back(sign[i]);
        }
    }
    return w;
}

namespace {

void enumerate_block(const LatticeBlock& blk, std::vector<SignedPermutation>& out) {
    std::vector<int> perm(blk.rank);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPermutation> acc;
    do {
        const int nsign = (blk.group == GroupKind::FullSigned || blk.group == GroupKind::SignedPermEven)
                              ? (1 << blk.rank)
                              : 1;
        for (int bits = 0; bits < nsign; ++bits) {
            if (blk.group == GroupKind::SignedPermEven && (std::popcount(unsigned(bits)) % 2) != 0) {
                continue;
            }
            SignedPermutation w;
            w.perm = perm;
            w.sign.resize(blk.rank);
            for (int i = 0; i < blk.rank; ++i) w.sign[i] = (bits >> i) & 1 ? -1 : 1;
            acc.push_back(std::move(w));
        }
        if (blk.group == GroupKind::Trivial) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out = std::move(acc);
}

}  // namespace

std::vector<SignedPermutation> LatticeWithForm::enumerate_group(std::size_t max_size) const {
    std::vector<SignedPermutation> acc = {SignedPermutation::identity(0)};
    for (const auto& blk : blocks_) {
        std::vector<SignedPermutation> blockw;
        enumerate_block(blk, blockw);
        std::vector<SignedPermutation> next;
        next.reserve(acc.size() * blockw.size());
        for (const auto& a : acc) {
            for (const auto& b : blockw) {
                SignedPermutation w = a;
                const int offset = a.rank();
                for (int i = 0; i < b.rank(); ++i) {
                    w.perm.push_back(offset + b.perm[i]);
                    w.sign.push_back(b.sign[i]);
                }
                next.push_back(std::move(w));
                if (next.size() > max_size) {
                    throw parameter_error("enumerate_group: group too large");
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<SignedPermutation> LatticeWithForm::stabilizer_sample(const Cocharacter& m,
                                                                  std::mt19937_64& rng,
                                                                  int count) const {
    require_member(m);
    std::vector<SignedPermutation> out;
    for (int tries = 0; tries < count * 40 && int(out.size()) < count; ++tries) {
        SignedPermutation w = random_element(rng);
        if (w.apply(m) == m) out.push_back(std::move(w));
    }
    if (int(out.size()) < count) {
        std::vector<SignedPermutation> fix;
        for (auto& w : enumerate_group()) {
            if (w.apply(m) == m) fix.push_back(std::move(w));
        }
        while (int(out.size()) < count) {
            out.push_back(fix[rng() % fix.size()]);
        }
    }
    return out;
}

std::vector<SignedPermutation> LatticeWithForm::stabilizer_mod_sample(const Cocharacter& m,
                                                                      long long n,
                                                                      std::mt19937_64& rng,
                                                                      int count) const {
    require_member(m);
    auto fixes_mod = [&](const SignedPermutation& w) {
        Cocharacter diff = w.apply(m) - m;
        Cocharacter delta(diff.size());
        for (int i = 0; i < diff.size(); ++i) {
            if (diff[i] % n != 0) return false;
            delta[i] = int(diff[i] / n);
        }
        return contains(delta);
    };
    std::vector<SignedPermutation> out;
    for (int tries = 0; tries < count * 40 && int(out.size()) < count; ++tries) {
        SignedPermutation w = random_element(rng);
        if (fixes_mod(w)) out.push_back(std::move(w));
    }
    if (int(out.size()) < count) {
        std::vector<SignedPermutation> fix;
        for (auto& w : enumerate_group()) {
            if (fixes_mod(w)) fix.push_back(std::move(w));
        }
        while (int(out.size()) < count) {
            out.push_back(fix[rng() % fix.size()]);
        }
    }
    return out;
}

Cocharacter LatticeWithForm::random_member(std::mt19937_64& rng, int max_entry) const {
    std::uniform_int_distribution<int> dist(-max_entry, max_entry);
    Cocharacter m(rank());
    for (int i = 0; i < rank(); ++i) m[i] = dist(rng);
    int offset = 0;
    for (const auto& blk : blocks_) {
        if (blk.membership == Membership::EvenSum && m.segment(offset, blk.rank).sum() % 2 != 0) {
            int i = offset + int(rng() % blk.rank);
            m[i] += (m[i] <= 0) ? 1 : -1;
        }
        offset += blk.rank;
    }
    return m;
}

bool LatticeWithForm::operator==(const LatticeWithForm& o) const {
    if (gram_ != o.gram_ || blocks_.size() != o.blocks_.size()) return false;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].rank != o.blocks_[i].rank ||
            blocks_[i].membership != o.blocks_[i].membership ||
            blocks_[i].group != o.blocks_[i].group) {
            return false;
        }
    }
    return true;
}

Jet borel_c2(const LatticeWithForm& L, const Cocharacter& m, const std::vector<Jet>& roots,
             const Jet& z) {
    if (int(roots.size()) != L.rank()) throw parameter_error("borel_c2: one root per lattice rank");
    std::vector<Jet> v;
    v.reserve(roots.size());
    for (int i = 0; i < L.rank(); ++i) v.push_back(z * Complex(double(m[i])) + roots[i]);
    Jet acc(v.empty() ? z.space() : v[0].space());
    for (int i = 0; i < L.rank(); ++i) {
        for (int j = 0; j < L.rank(); ++j) {
            const double g = double(L.gram()(i, j));
            if (g != 0.0) acc += v[i] * v[j] * Complex(0.5 * g);
        }
    }
    return acc;
}

}  // namespace sigmaor
