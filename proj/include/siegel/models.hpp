#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "siegel/chars.hpp"
#include "siegel/error.hpp"
#include "siegel/gl22.hpp"

namespace siegel {

using CMat = Eigen::MatrixXcd;

struct ProjectorRankMismatch : Error {
    explicit ProjectorRankMismatch(const std::string& w) : Error(ErrorKind::Mismatch, w) {}
};
struct NoIntertwiner : Error {
    explicit NoIntertwiner(const std::string& w) : Error(ErrorKind::BadArgument, w) {}
};
struct NotNormalizing : Error {
    explicit NotNormalizing(const std::string& w) : Error(ErrorKind::BadArgument, w) {}
};

/// Largest q for which explicit models are built.
constexpr int kMaxModelQ = 5;

/// A matrix representation of GL_2(q), with one matrix stored per group element.
class GL2Model {
public:
    GL2Model(const FqCtx& F, std::vector<CMat> table);
    const FqCtx& field() const { return *F_; }
    int dim() const { return dim_; }
    const CMat& operator()(const GL2Elem& g) const { return table_[index_->index(g)]; }
    std::complex<double> trace(const GL2Elem& g) const { return (*this)(g).trace(); }
    /// g -> lambda(det g) rho(g), lambda(gen^m) = zeta_{q-1}^{l m}.
    GL2Model twisted(int l) const;

private:
    const FqCtx* F_;
    std::shared_ptr<const GL2Index> index_;
    std::vector<CMat> table_;
    int dim_ = 0;
};

/// The module induced from the upper unipotent subgroup with character psi; dimension |GL_2(q)|/q.
GL2Model gelfand_graev(const FqCtx& F);
/// Model of rho_theta cut out of the Gelfand-Graev module by the isotypic projector.
GL2Model project_cuspidal(const GL2Model& gg, CuspidalLabel t);

/// A representation of GL_{2,2}(q) realised on a subspace (orthonormal columns of basis) of
/// V1 (x) V2, acting by rho1(g) (x) rho2(h).
class Rep22 {
public:
    Rep22(std::shared_ptr<const GL2Model> r1, std::shared_ptr<const GL2Model> r2);
    Rep22 restricted(const CMat& basis) const;

    const FqCtx& field() const { return r1_->field(); }
    int dim() const { return dim_; }
    int ambient_dim() const { return r1_->dim() * r2_->dim(); }
    bool is_full() const { return !basis_; }
    const CMat* basis() const { return basis_ ? &*basis_ : nullptr; }
    CMat operator()(const GL22Elem& x) const;
    CMat ambient(const GL22Elem& x) const;
    std::complex<double> trace(const GL22Elem& x) const;
    /// Swap v (x) w -> w (x) v on the ambient space (requires equal factor dims), compressed to the subspace.
    CMat swap_operator() const;

private:
    std::shared_ptr<const GL2Model> r1_, r2_;
    std::optional<CMat> basis_;
    int dim_ = 0;
};

Rep22 restrict_tensor(std::shared_ptr<const GL2Model> r1, std::shared_ptr<const GL2Model> r2);

/// Isotypic projectors of rep on its own space, via a generic Hermitian commutant element.
std::vector<CMat> decompose(const Rep22& rep, uint64_t seed = 0);

/// (1/|R|) sum_{r in R} rep(r).
CMat fixed_projector(const Rep22& rep, const SubgroupR& R);
int64_t fixed_rank(const Rep22& rep, const SubgroupR& R);

/// T with T rep(x) = rep(u_action(x)) T, normalised to T^2 = I with the first entry of
/// modulus > 1e-6 (column-major) having positive real part; the other extension is -T.
CMat u_intertwiner(const Rep22& rep);

/// certify_integer(tr(O P_R)) after checking O P_R O^-1 = P_R.
int64_t twisted_trace(const Rep22& rep, const CMat& O, const SubgroupR& R);

/// The representation of the u-extended group on rep (+) rep^u, for sigma not self-twisted.
class InducedRep {
public:
    explicit InducedRep(Rep22 base) : base_(std::move(base)) {}
    int dim() const { return 2 * base_.dim(); }
    CMat operator()(const ExtElem& s) const;
    CMat fixed_projector(const SubgroupR& R) const;

private:
    Rep22 base_;
};

int64_t induced_twisted_trace(const InducedRep& tau, const ExtElem& s, const SubgroupR& R);

/// Explicit models for every sigma at one q, with constituents split by decompose.
/// Plus is the constituent whose character has the larger real part (then imaginary part)
/// at the first element of enumerate_gl22 where the two characters differ.
class ModelOracle : public ConstituentOracle {
public:
    explicit ModelOracle(const FqCtx& F, uint64_t seed = 0);

    const FqCtx& field() const { return *F_; }
    std::shared_ptr<const GL2Model> cuspidal(CuspidalLabel t) const;
    /// Model of sigma; for Full sigma = [lambda rho x rho] the first factor is the twist of the second.
    Rep22 sigma_rep(const SigmaLabel& s) const;

    CharValue constituent_char(const SigmaLabel& sigma, const GL22Elem& x) const override;
    bool constituent_self_twisted(const SigmaLabel& sigma) const override;

    uint64_t seed() const { return seed_; }

private:
    const FqCtx* F_;
    uint64_t seed_;
    std::shared_ptr<const GL2Model> gg_;
    mutable std::map<int, std::shared_ptr<const GL2Model>> cusp_;
    mutable std::map<std::pair<int, int>, std::pair<CMat, CMat>> split_;  // (Plus, Minus) bases
    mutable std::map<std::tuple<int, int, int>, bool> self_twist_;

    Rep22 full_rep(const SigmaLabel& s) const;
    const std::pair<CMat, CMat>& constituent_bases(const SigmaLabel& s) const;
};

}  // namespace siegel
