#include "siegel/models.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace siegel {

namespace {

constexpr double kResidual = 1e-8;

std::complex<double> lambda_det(const FqCtx& F, int l, const GL2Elem& g) {
    const Fq d = gl2_det(F, g);
    return CharValue::root_of_unity(F.q() - 1, int64_t(l) * (d.v - 1)).value();
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Orthonormal basis of the range of a Hermitian projector.
CMat range_basis(const CMat& P) {
    Eigen::SelfAdjointEigenSolver<CMat> es(P);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < P.rows(); ++i)
        if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
    CMat B(P.rows(), Eigen::Index(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c) B.col(Eigen::Index(c)) = es.eigenvectors().col(keep[c]);
    return B;
}

// Basis (as d x d matrices) of {X : X A_i = B_i X for all i}.
std::vector<CMat> intertwiner_space(const std::vector<CMat>& A, const std::vector<CMat>& B) {
    const Eigen::Index d = A.front().rows();
    const CMat I = CMat::Identity(d, d);
    CMat gram = CMat::Zero(d * d, d * d);
    for (size_t i = 0; i < A.size(); ++i) {
        const CMat M = kron(A[i].transpose(), I) - kron(I, B[i]);
        gram += M.adjoint() * M;
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(gram);
    std::vector<CMat> out;
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        if (es.eigenvalues()(i) > kResidual) break;
        out.push_back(es.eigenvectors().col(i).reshaped(d, d));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- GL2Model

GL2Model::GL2Model(const FqCtx& F, std::vector<CMat> table)
    : F_(&F), index_(std::make_shared<GL2Index>(F)), table_(std::move(table)) {
    if (int(table_.size()) != index_->size()) throw BadArgument("GL2Model: table size differs from |GL_2(q)|");
    dim_ = int(table_.front().rows());
}

GL2Model GL2Model::twisted(int l) const {
    std::vector<CMat> t(table_.size());
    const auto& el = index_->elements();
    for (size_t i = 0; i < el.size(); ++i) t[i] = lambda_det(*F_, l, el[i]) * table_[i];
    return GL2Model(*F_, std::move(t));
}

GL2Model gelfand_graev(const FqCtx& F) {
    if (F.q() > kMaxModelQ) throw UnsupportedSize("gelfand_graev: q > " + std::to_string(kMaxModelQ));
    const GL2Index idx(F);
    const auto& G = idx.elements();
    // Left cosets xU with U upper unipotent; canonical representative has b = 0 (a != 0) or d = 0.
    auto coset_rep = [&](const GL2Elem& x) {
        Fq t = x.a.v != 0 ? F.neg(F.div(x.b, x.a)) : F.neg(F.div(x.d, x.c));
        return gl2_mul(F, x, gl2_make(F, F.one(), t, F.zero(), F.one()));
    };
    std::vector<int> coset_of(G.size(), -1);
    std::vector<GL2Elem> reps;
    for (size_t i = 0; i < G.size(); ++i) {
        const GL2Elem r = coset_rep(G[i]);
        const int ri = idx.index(r);
        if (coset_of[ri] < 0) {
            coset_of[ri] = int(reps.size());
            reps.push_back(r);
        }
        coset_of[i] = coset_of[ri];
    }
    const int d = int(reps.size());
    std::vector<CMat> table(G.size());
    for (size_t gi = 0; gi < G.size(); ++gi) {
        CMat M = CMat::Zero(d, d);
        for (int i = 0; i < d; ++i) {
            const GL2Elem y = gl2_mul(F, G[gi], reps[i]);
            const int j = coset_of[idx.index(y)];
            const Fq t = gl2_mul(F, gl2_inv(F, reps[j]), y).b;
            M(j, i) = F.psi(t).value();
        }
        table[gi] = std::move(M);
    }
    return GL2Model(F, std::move(table));
}

GL2Model project_cuspidal(const GL2Model& gg, CuspidalLabel t) {
    const FqCtx& F = gg.field();
    if (!is_cuspidal(F, t)) throw BadArgument("project_cuspidal: theta^q == theta");
    const GL2Index idx(F);
    const auto& G = idx.elements();
    const int d = F.q() - 1;
    CMat P = CMat::Zero(gg.dim(), gg.dim());
    for (const auto& g : G) P += std::conj(cuspidal_char(F, t, g).value()) * gg(g);
    P *= double(d) / double(G.size());
    const CMat B = range_basis(P);
    if (B.cols() != d)
        throw ProjectorRankMismatch("project_cuspidal: rank " + std::to_string(B.cols()) + ", expected " +
                                    std::to_string(d));
    std::vector<CMat> table(G.size());
    for (size_t i = 0; i < G.size(); ++i) table[i] = B.adjoint() * gg(G[i]) * B;
    return GL2Model(F, std::move(table));
}

// ---------------------------------------------------------------- Rep22

Rep22::Rep22(std::shared_ptr<const GL2Model> r1, std::shared_ptr<const GL2Model> r2)
    : r1_(std::move(r1)), r2_(std::move(r2)) {
    if (&r1_->field() != &r2_->field()) throw BadArgument("Rep22: models over different fields");
    dim_ = r1_->dim() * r2_->dim();
}

Rep22 Rep22::restricted(const CMat& basis) const {
    Rep22 out = *this;
    out.basis_ = basis_ ? CMat(*basis_ * basis) : basis;
    out.dim_ = int(basis.cols());
    return out;
}

CMat Rep22::ambient(const GL22Elem& x) const { return kron((*r1_)(x.first), (*r2_)(x.second)); }

CMat Rep22::operator()(const GL22Elem& x) const {
    if (!basis_) return ambient(x);
    return basis_->adjoint() * ambient(x) * *basis_;
}

std::complex<double> Rep22::trace(const GL22Elem& x) const { return (*this)(x).trace(); }

CMat Rep22::swap_operator() const {
    const int d1 = r1_->dim(), d2 = r2_->dim();
    if (d1 != d2) throw BadArgument("swap_operator: factor dimensions differ");
    CMat S = CMat::Zero(d1 * d2, d1 * d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) S(j * d2 + i, i * d2 + j) = 1;
    if (!basis_) return S;
    return basis_->adjoint() * S * *basis_;
}

Rep22 restrict_tensor(std::shared_ptr<const GL2Model> r1, std::shared_ptr<const GL2Model> r2) {
    return Rep22(std::move(r1), std::move(r2));
}

// ---------------------------------------------------------------- decomposition and traces

std::vector<CMat> decompose(const Rep22& rep, uint64_t seed) {
    const FqCtx& F = rep.field();
    std::vector<CMat> A;
    for (const auto& g : gl22_generators(F)) A.push_back(rep(g));
    const auto comm = intertwiner_space(A, A);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    CMat H = CMat::Zero(rep.dim(), rep.dim());
    for (const auto& X : comm) {
        const std::complex<double> c(U(rng), U(rng));
        H += c * X + std::conj(c) * X.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(H);
    const auto& ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    std::vector<CMat> out;
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= ev.size(); ++i) {
        if (i < ev.size() && ev(i) - ev(i - 1) < 1e-6 * scale) continue;
        const CMat V = es.eigenvectors().middleCols(start, i - start);
        out.push_back(V * V.adjoint());
        start = i;
    }
    return out;
}

CMat fixed_projector(const Rep22& rep, const SubgroupR& R) {
    CMat P = CMat::Zero(rep.dim(), rep.dim());
    for (const auto& r : R.elements) P += rep(r);
    return P / double(R.size());
}

int64_t fixed_rank(const Rep22& rep, const SubgroupR& R) {
    return certify_integer(fixed_projector(rep, R).trace());
}

CMat u_intertwiner(const Rep22& rep) {
    const FqCtx& F = rep.field();
    std::vector<CMat> A, B;
    for (const auto& g : gl22_generators(F)) {
        A.push_back(rep(g));
        B.push_back(rep(u_action(F, g)));
    }
    const auto sol = intertwiner_space(A, B);
    if (sol.empty()) throw NoIntertwiner("u_intertwiner: sigma is not isomorphic to its u-twist");
    if (sol.size() > 1) throw Error(ErrorKind::Mismatch, "u_intertwiner: representation is reducible");
    CMat T = sol.front();
    const std::complex<double> c = (T * T)(0, 0);
    T /= std::sqrt(c);
    for (Eigen::Index k = 0; k < T.size(); ++k) {
        const auto z = T.data()[k];
        if (std::abs(z) > 1e-6) {
            if (z.real() < 0 || (std::abs(z.real()) < 1e-12 && z.imag() < 0)) T = -T;
            break;
        }
    }
    return T;
}

int64_t twisted_trace(const Rep22& rep, const CMat& O, const SubgroupR& R) {
    const CMat P = fixed_projector(rep, R);
    const CMat Oinv = O.inverse();
    if ((O * P * Oinv - P).cwiseAbs().maxCoeff() > kResidual)
        throw NotNormalizing("twisted_trace: operator does not preserve the fixed space");
    return certify_integer((O * P).trace());
}

CMat InducedRep::operator()(const ExtElem& s) const {
    const FqCtx& F = base_.field();
    const int d = base_.dim();
    CMat M = CMat::Zero(2 * d, 2 * d);
    const CMat a = base_(s.base);
    const CMat b = base_(u_action(F, s.base));
    if (!s.eps) {
        M.topLeftCorner(d, d) = a;
        M.bottomRightCorner(d, d) = b;
    } else {
        M.topRightCorner(d, d) = a;
        M.bottomLeftCorner(d, d) = b;
    }
    return M;
}

CMat InducedRep::fixed_projector(const SubgroupR& R) const {
    CMat P = CMat::Zero(dim(), dim());
    for (const auto& r : R.elements) P += (*this)(ExtElem{r, false});
    return P / double(R.size());
}

int64_t induced_twisted_trace(const InducedRep& tau, const ExtElem& s, const SubgroupR& R) {
    const CMat P = tau.fixed_projector(R);
    const CMat O = tau(s);
    if ((O * P - P * O).cwiseAbs().maxCoeff() > kResidual)
        throw NotNormalizing("induced_twisted_trace: element does not preserve the fixed space");
    return certify_integer((O * P).trace());
}

// ---------------------------------------------------------------- ModelOracle

ModelOracle::ModelOracle(const FqCtx& F, uint64_t seed)
    : F_(&F), seed_(seed), gg_(std::make_shared<GL2Model>(gelfand_graev(F))) {}

std::shared_ptr<const GL2Model> ModelOracle::cuspidal(CuspidalLabel t) const {
    const int key = canonical(*F_, t).k;
    auto it = cusp_.find(key);
    if (it == cusp_.end()) it = cusp_.emplace(key, std::make_shared<GL2Model>(project_cuspidal(*gg_, t))).first;
    return it->second;
}

Rep22 ModelOracle::full_rep(const SigmaLabel& s) const {
    const SigmaLabel full{s.theta1, s.theta2, Constituent::Full};
    for (int l = 0; l < F_->q() - 1; ++l) {
        const SigmaLabel cand{twist_by_lambda(*F_, s.theta2, l), s.theta2, Constituent::Full};
        if (is_cuspidal(*F_, cand.theta1) && same_full_character(*F_, full, cand)) {
            auto r2 = cuspidal(s.theta2);
            return Rep22(std::make_shared<GL2Model>(r2->twisted(l)), r2);
        }
    }
    return Rep22(cuspidal(s.theta1), cuspidal(s.theta2));
}

const std::pair<CMat, CMat>& ModelOracle::constituent_bases(const SigmaLabel& s) const {
    const std::pair<int, int> key{s.theta1.k, s.theta2.k};
    auto it = split_.find(key);
    if (it != split_.end()) return it->second;
    const Rep22 rep = full_rep(s);
    const auto P = decompose(rep, seed_);
    if (P.size() != 2 || std::abs(P[0].trace().real() - P[1].trace().real()) > 0.5)
        throw ProjectorRankMismatch("constituent_bases: restriction does not split into two equal halves");
    std::pair<CMat, CMat> bases{range_basis(P[0]), range_basis(P[1])};
    for (const auto& x : enumerate_gl22(*F_)) {
        const CMat K = rep(x);
        const auto a = (P[0] * K).trace(), b = (P[1] * K).trace();
        if (std::abs(a - b) < 1e-6) continue;
        const bool swap = a.real() < b.real() - 1e-9 || (std::abs(a.real() - b.real()) <= 1e-9 && a.imag() < b.imag());
        if (swap) std::swap(bases.first, bases.second);
        break;
    }
    return split_.emplace(key, std::move(bases)).first->second;
}

Rep22 ModelOracle::sigma_rep(const SigmaLabel& s) const {
    if (!is_valid_sigma(*F_, s)) throw BadArgument("sigma_rep: invalid sigma label");
    const Rep22 full = full_rep(s);
    if (s.constituent == Constituent::Full) return full;
    const auto& b = constituent_bases(s);
    return full.restricted(s.constituent == Constituent::Plus ? b.first : b.second);
}

CharValue ModelOracle::constituent_char(const SigmaLabel& sigma, const GL22Elem& x) const {
    return CharValue(sigma_rep(sigma).trace(x));
}

bool ModelOracle::constituent_self_twisted(const SigmaLabel& sigma) const {
    const std::tuple<int, int, int> key{sigma.theta1.k, sigma.theta2.k, int(sigma.constituent)};
    auto it = self_twist_.find(key);
    if (it != self_twist_.end()) return it->second;
    const Rep22 rep = sigma_rep(sigma);
    bool same = true;
    for (const auto& x : enumerate_gl22(*F_))
        if (std::abs(rep.trace(x) - rep.trace(u_action(*F_, x))) > 1e-6) {
            same = false;
            break;
        }
    self_twist_[key] = same;
    return same;
}

}  // namespace siegel
