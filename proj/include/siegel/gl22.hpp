#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "siegel/finite_field.hpp"

namespace siegel {

/// 2x2 matrix over F_q, rows (a b; c d).
struct GL2Elem {
    Fq a, b, c, d;
    friend bool operator==(const GL2Elem&, const GL2Elem&) = default;
    friend auto operator<=>(const GL2Elem&, const GL2Elem&) = default;
};

/// Pair (g, h) of invertible matrices with det g = det h.
struct GL22Elem {
    GL2Elem first, second;
    friend bool operator==(const GL22Elem&, const GL22Elem&) = default;
    friend auto operator<=>(const GL22Elem&, const GL22Elem&) = default;
};

/// Element of GL_{2,2}(q) extended by the order-two u-action: base * u^eps.
struct ExtElem {
    GL22Elem base;
    bool eps = false;
    friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

// GL_2(q)
GL2Elem gl2_identity(const FqCtx& F);
GL2Elem gl2_make(const FqCtx& F, Fq a, Fq b, Fq c, Fq d);
GL2Elem gl2_diag(const FqCtx& F, Fq a, Fq d);
GL2Elem gl2_lower(const FqCtx& F, Fq a, Fq u);  // (a 0; u a)
GL2Elem gl2_w(const FqCtx& F);                  // (0 1; -1 0)
Fq gl2_det(const FqCtx& F, const GL2Elem& g);
Fq gl2_trace(const FqCtx& F, const GL2Elem& g);
GL2Elem gl2_mul(const FqCtx& F, const GL2Elem& x, const GL2Elem& y);
GL2Elem gl2_inv(const FqCtx& F, const GL2Elem& g);
bool gl2_is_scalar(const GL2Elem& g);
std::vector<GL2Elem> enumerate_gl2(const FqCtx& F);
int64_t gl2_order(int q);

/// Dense index of a GL_2(q) element within enumerate_gl2 order, via a q^4 table.
class GL2Index {
public:
    explicit GL2Index(const FqCtx& F);
    int index(const GL2Elem& g) const { return table_[code(g)]; }
    const std::vector<GL2Elem>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }

private:
    int q_;
    std::vector<GL2Elem> elems_;
    std::vector<int> table_;
    int code(const GL2Elem& g) const { return ((g.a.v * q_ + g.b.v) * q_ + g.c.v) * q_ + g.d.v; }
};

// GL_{2,2}(q)
GL22Elem gl22_identity(const FqCtx& F);
GL22Elem gl22_mul(const FqCtx& F, const GL22Elem& x, const GL22Elem& y);
GL22Elem gl22_inv(const FqCtx& F, const GL22Elem& x);
GL22Elem gl22_conj(const FqCtx& F, const GL22Elem& by, const GL22Elem& x);  // by x by^-1
bool gl22_valid(const FqCtx& F, const GL22Elem& x);
uint32_t gl22_key(const GL22Elem& x);
/// All of GL_{2,2}(q); q <= 9.
std::vector<GL22Elem> enumerate_gl22(const FqCtx& F);
int64_t gl22_order(int q);

/// Conjugation by u_1 descended to GL_{2,2}(q): swap factors and conjugate by (w, w).
GL22Elem u_action(const FqCtx& F, const GL22Elem& x);

ExtElem ext_mul(const FqCtx& F, const ExtElem& x, const ExtElem& y);
ExtElem ext_inv(const FqCtx& F, const ExtElem& x);

enum class SubgroupKind { Torus, Unip, ArtinUnip, U1, U2, Custom };
std::string to_string(SubgroupKind k);

/// An explicitly enumerated subgroup of GL_{2,2}(q); elements kept sorted.
struct SubgroupR {
    std::vector<GL22Elem> elements;
    SubgroupKind label = SubgroupKind::Custom;

    size_t size() const { return elements.size(); }
    bool contains(const GL22Elem& x) const;
    bool subset_of(const SubgroupR& other) const;
    friend bool operator==(const SubgroupR& a, const SubgroupR& b) { return a.elements == b.elements; }
};

SubgroupR make_subgroup(std::vector<GL22Elem> elems, SubgroupKind label);

/// The standard subgroups: Torus {(diag(a,b), diag(c,abc^-1))}, Unip {((a,0;u,a),(a,0;u,a))},
/// ArtinUnip {((a,0;u+a(b^2+b),a),(a,0;u,a))} (q even), U1, U2.
SubgroupR subgroup_R(SubgroupKind kind, const FqCtx& F);

SubgroupR subgroup_closure(const FqCtx& F, std::span<const GL22Elem> gens,
                           SubgroupKind label = SubgroupKind::Custom);
bool is_subgroup(const FqCtx& F, const SubgroupR& R);
SubgroupR conjugate_subgroup(const FqCtx& F, const GL22Elem& x, const SubgroupR& R);

/// Some x with x A x^-1 = B, searched over all of GL_{2,2}(q).
std::optional<GL22Elem> conjugate_subgroups(const FqCtx& F, const SubgroupR& A, const SubgroupR& B);
/// Does R contain some conjugate of S?
bool contains_conjugate(const FqCtx& F, const SubgroupR& R, const SubgroupR& S);

/// A generating set of GL_{2,2}(q): two transvections per factor and (diag(g,1), diag(g,1)).
std::vector<GL22Elem> gl22_generators(const FqCtx& F);

}  // namespace siegel
