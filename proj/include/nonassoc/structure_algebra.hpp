#pragma once

// Finite-dimensional algebras over exact rationals given by dense structure
// constants, with elements, derived-product transforms, tensor products,
// nuclei/centers, associative bilinear form solvers, idempotents, Peirce
// decompositions, minimal polynomials, derivations and a formal-reality probe.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace nonassoc {

struct algebra_mismatch_error : std::runtime_error {
    algebra_mismatch_error() : std::runtime_error("elements belong to different algebras") {}
};
struct no_unit_error : std::runtime_error {
    no_unit_error() : std::runtime_error("algebra has no unit element") {}
};
struct not_idempotent_error : std::runtime_error {
    not_idempotent_error() : std::runtime_error("element is not idempotent") {}
};
struct not_power_associative_error : std::runtime_error {
    int i, j;
    not_power_associative_error(int i_, int j_)
        : std::runtime_error("power chain broken: x^" + std::to_string(i_) + " x^" +
                             std::to_string(j_) + " != x^" + std::to_string(i_ + j_)),
          i(i_),
          j(j_) {}
};
struct degree_exceeded_error : std::runtime_error {
    degree_exceeded_error() : std::runtime_error("degree bound exceeded") {}
};
struct not_in_nucleus_error : std::runtime_error {
    not_in_nucleus_error() : std::runtime_error("element is not in the nucleus") {}
};
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class StructureAlgebra;
using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

// Element of a StructureAlgebra: coefficient vector tied to an algebra handle.
struct Element {
    AlgebraPtr algebra;
    RatVector coeffs;

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r == 0; });
    }
    // Sum of |coefficients|; used as an exact residual magnitude in reports.
    Rational abs_sum() const {
        Rational s(0);
        for (const auto& c : coeffs) s += rational_abs(c);
        return s;
    }
    friend bool operator==(const Element& x, const Element& y) {
        return x.algebra == y.algebra && x.coeffs == y.coeffs;
    }
};

class StructureAlgebra : public std::enable_shared_from_this<StructureAlgebra> {
   public:
    static constexpr std::size_t kDimCap = 64;

    // Dense structure constants: c[(i*dim + j)*dim + k] with e_i e_j = Σ_k c e_k.
    static AlgebraPtr create(std::string name, std::size_t dim,
                             std::vector<std::string> basis_names, std::vector<Rational> constants,
                             std::optional<std::size_t> unit_index = std::nullopt,
                             std::optional<RatMatrix> involution = std::nullopt) {
        if (dim == 0) throw input_error("zero-dimensional algebra rejected");
        if (dim > kDimCap)
            throw resource_limit_error("dimension " + std::to_string(dim) + " exceeds cap " +
                                       std::to_string(kDimCap));
        if (basis_names.size() != dim) throw input_error("basis name count does not match dim");
        if (constants.size() != dim * dim * dim)
            throw input_error("structure constant array has wrong size");
        auto alg = AlgebraPtr(new StructureAlgebra(std::move(name), dim, std::move(basis_names),
                                                   std::move(constants), unit_index,
                                                   std::move(involution)));
        alg->validate();
        return alg;
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    std::optional<std::size_t> unit_index() const { return unit_; }
    const std::optional<RatMatrix>& involution() const { return involution_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    Element element(RatVector coeffs) const {
        if (coeffs.size() != dim_) throw input_error("coefficient vector has wrong length");
        return Element{shared_from_this(), std::move(coeffs)};
    }
    Element basis(std::size_t i) const {
        RatVector v(dim_, Rational(0));
        v[i] = 1;
        return element(std::move(v));
    }
    Element zero() const { return element(RatVector(dim_, Rational(0))); }
    Element unit() const {
        if (!unit_) throw no_unit_error();
        return basis(*unit_);
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (c(i, j, k) != c(j, i, k)) return false;
        return true;
    }

   private:
    StructureAlgebra(std::string name, std::size_t dim, std::vector<std::string> names,
                     std::vector<Rational> constants, std::optional<std::size_t> unit,
                     std::optional<RatMatrix> involution)
        : name_(std::move(name)),
          dim_(dim),
          names_(std::move(names)),
          c_(std::move(constants)),
          unit_(unit),
          involution_(std::move(involution)) {}

    void validate() const;

    std::string name_;
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<Rational> c_;
    std::optional<std::size_t> unit_;
    std::optional<RatMatrix> involution_;
};

// ---------------------------------------------------------------------------
// Element arithmetic
// ---------------------------------------------------------------------------

inline void require_same(const Element& x, const Element& y) {
    if (x.algebra != y.algebra) throw algebra_mismatch_error();
}

inline Element operator+(const Element& x, const Element& y) {
    require_same(x, y);
    RatVector v(x.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.coeffs[i] + y.coeffs[i];
    return Element{x.algebra, std::move(v)};
}

inline Element operator-(const Element& x, const Element& y) {
    require_same(x, y);
    RatVector v(x.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.coeffs[i] - y.coeffs[i];
    return Element{x.algebra, std::move(v)};
}

inline Element operator-(const Element& x) {
    RatVector v(x.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -x.coeffs[i];
    return Element{x.algebra, std::move(v)};
}

inline Element operator*(const Rational& s, const Element& x) {
    RatVector v(x.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * x.coeffs[i];
    return Element{x.algebra, std::move(v)};
}

// Bilinear product from the structure constants.
inline Element operator*(const Element& x, const Element& y) {
    require_same(x, y);
    const auto& a = *x.algebra;
    std::size_t n = a.dim();
    RatVector v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coeffs[j] == 0) continue;
            Rational f = x.coeffs[i] * y.coeffs[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& ck = a.c(i, j, k);
                if (ck != 0) v[k] += f * ck;
            }
        }
    }
    return Element{x.algebra, std::move(v)};
}

// Left-normed power x^{n+1} = x^n · x; x⁰ is the unit (error if absent).
inline Element power(const Element& x, std::size_t n) {
    if (n == 0) return x.algebra->unit();
    Element acc = x;
    for (std::size_t k = 1; k < n; ++k) acc = acc * x;
    return acc;
}

inline Element commutator(const Element& x, const Element& y) { return x * y - y * x; }

inline Element associator(const Element& x, const Element& y, const Element& z) {
    return (x * y) * z - x * (y * z);
}

// Applies the algebra involution x ↦ x*.
inline Element star(const Element& x) {
    const auto& inv = x.algebra->involution();
    if (!inv) throw input_error("algebra has no involution");
    return Element{x.algebra, inv->apply(x.coeffs)};
}

inline void StructureAlgebra::validate() const {
    if (unit_) {
        if (*unit_ >= dim_) throw input_error("unit index out of range");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k) {
                Rational expect(i == k ? 1 : 0);
                if (c(*unit_, i, k) != expect || c(i, *unit_, k) != expect)
                    throw input_error("declared unit does not satisfy the unit law");
            }
    }
    if (involution_) {
        if (involution_->rows() != dim_ || involution_->cols() != dim_)
            throw input_error("involution matrix has wrong shape");
        if (*involution_ * *involution_ != RatMatrix::identity(dim_))
            throw input_error("involution is not involutive (M^2 != I)");
        // Anti-automorphism on basis products: (e_i e_j)* = e_j* e_i*.
        // A non-owning handle is enough for the product evaluations below.
        auto self = AlgebraPtr(this, [](const StructureAlgebra*) {});
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                RatVector prod(dim_);
                for (std::size_t k = 0; k < dim_; ++k) prod[k] = c(i, j, k);
                RatVector lhs = involution_->apply(prod);
                RatVector ei(dim_, Rational(0)), ej(dim_, Rational(0));
                ei[i] = 1;
                ej[j] = 1;
                Element sj{self, involution_->apply(ej)};
                Element si2{self, involution_->apply(ei)};
                Element rhs = sj * si2;
                if (lhs != rhs.coeffs)
                    throw input_error("involution is not an anti-automorphism");
            }
    }
}

// ---------------------------------------------------------------------------
// Derived-product transforms
// ---------------------------------------------------------------------------

// x×y = λxy + μyx: structure constants λc + μcᵀ (transpose in (i,j)).
inline AlgebraPtr quasi_transform(const AlgebraPtr& a, const Rational& lambda, const Rational& mu,
                                  const std::string& name_suffix = "-quasi") {
    std::size_t n = a->dim();
    std::vector<Rational> cc(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                cc[(i * n + j) * n + k] = lambda * a->c(i, j, k) + mu * a->c(j, i, k);
    // The original unit survives exactly when λ+μ = 1.
    std::optional<std::size_t> unit;
    if (a->unit_index() && lambda + mu == 1) unit = a->unit_index();
    return StructureAlgebra::create(a->name() + name_suffix, n, a->basis_names(), std::move(cc),
                                    unit, a->involution());
}

inline AlgebraPtr jordan_transform(const AlgebraPtr& a) {
    return quasi_transform(a, Rational(1, 2), Rational(1, 2), "-sym");
}

inline AlgebraPtr lie_transform(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    std::vector<Rational> cc(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                cc[(i * n + j) * n + k] = a->c(i, j, k) - a->c(j, i, k);
    return StructureAlgebra::create(a->name() + "-comm", n, a->basis_names(), std::move(cc),
                                    std::nullopt, a->involution());
}

// Restricts the algebra to the subspace spanned by the given basis vectors;
// throws if the subspace is not closed under the product.
inline AlgebraPtr subalgebra(const AlgebraPtr& a, const std::vector<RatVector>& span_basis,
                             const std::string& name, std::vector<std::string> names = {}) {
    std::size_t n = a->dim();
    std::size_t m = span_basis.size();
    RatMatrix cols(n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) cols(i, j) = span_basis[j][i];
    std::vector<Rational> cc(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Element p = a->element(span_basis[i]) * a->element(span_basis[j]);
            auto coeff = cols.solve(p.coeffs);
            if (!coeff) throw input_error("subspace is not closed under the product");
            for (std::size_t k = 0; k < m; ++k) cc[(i * m + j) * m + k] = (*coeff)[k];
        }
    if (names.empty())
        for (std::size_t i = 0; i < m; ++i) names.push_back("b" + std::to_string(i));
    return StructureAlgebra::create(name, m, std::move(names), std::move(cc));
}

inline AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    std::size_t na = a->dim(), nb = b->dim();
    std::size_t n = na * nb;
    if (n > StructureAlgebra::kDimCap)
        throw resource_limit_error("tensor product dimension exceeds cap");
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t p = 0; p < nb; ++p)
            names.push_back(a->basis_names()[i] + "⊗" + b->basis_names()[p]);
    std::vector<Rational> cc(n * n * n, Rational(0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t p = 0; p < nb; ++p)
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t q = 0; q < nb; ++q)
                    for (std::size_t k = 0; k < na; ++k) {
                        const Rational& ca = a->c(i, j, k);
                        if (ca == 0) continue;
                        for (std::size_t r = 0; r < nb; ++r) {
                            const Rational& cb = b->c(p, q, r);
                            if (cb == 0) continue;
                            cc[((i * nb + p) * n + (j * nb + q)) * n + (k * nb + r)] = ca * cb;
                        }
                    }
    std::optional<std::size_t> unit;
    if (a->unit_index() && b->unit_index()) unit = *a->unit_index() * nb + *b->unit_index();
    return StructureAlgebra::create(a->name() + "⊗" + b->name(), n, std::move(names),
                                    std::move(cc), unit);
}

// Verifies (x⊗α)∘(y⊗β) − (x⊗β)∘(y⊗α) = ½[x,y]⊗[α,β] on all basis 4-tuples,
// where ∘ is the symmetrized product of the tensor algebra.
inline bool tensor_split_identity_holds(const AlgebraPtr& a, const AlgebraPtr& b) {
    auto t = tensor_product(a, b);
    std::size_t na = a->dim(), nb = b->dim();
    auto emb = [&](std::size_t i, std::size_t p) { return t->basis(i * nb + p); };
    Rational half(1, 2);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t p = 0; p < nb; ++p)
                for (std::size_t q = 0; q < nb; ++q) {
                    auto sym = [&](const Element& x, const Element& y) {
                        return half * (x * y + y * x);
                    };
                    Element lhs = sym(emb(i, p), emb(j, q)) - sym(emb(i, q), emb(j, p));
                    // ½[e_i,e_j]⊗[f_p,f_q] expanded into the tensor basis.
                    Element com_a = commutator(a->basis(i), a->basis(j));
                    Element com_b = commutator(b->basis(p), b->basis(q));
                    RatVector rhs(t->dim(), Rational(0));
                    for (std::size_t k = 0; k < na; ++k)
                        for (std::size_t r = 0; r < nb; ++r)
                            rhs[k * nb + r] = half * com_a.coeffs[k] * com_b.coeffs[r];
                    if (lhs.coeffs != rhs) return false;
                }
    return true;
}

// ---------------------------------------------------------------------------
// Nucleus / center
// ---------------------------------------------------------------------------

namespace detail {

// Incrementally maintained reduced row space; used to intersect nullspaces
// without materializing huge constraint matrices.
class RowSpace {
   public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    // Reduces the row against the pivots and inserts it if independent.
    void add(RatVector row) {
        for (const auto& [piv, r] : rows_) {
            if (row[piv] == 0) continue;
            Rational f = row[piv];
            for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * r[j];
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            if (row[j] == 0) continue;
            Rational inv = row[j];
            for (std::size_t k = 0; k < cols_; ++k) row[k] /= inv;
            for (auto& [piv, r] : rows_) {
                if (r[j] == 0) continue;
                Rational f = r[j];
                for (std::size_t k = 0; k < cols_; ++k) r[k] -= f * row[k];
            }
            rows_.emplace_back(j, std::move(row));
            return;
        }
    }

    std::size_t rank() const { return rows_.size(); }

    // True if the row lies in the collected span.
    bool contains(RatVector row) const {
        for (const auto& [piv, r] : rows_) {
            if (row[piv] == 0) continue;
            Rational f = row[piv];
            for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * r[j];
        }
        return std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; });
    }

    // Nullspace of the collected row space.
    std::vector<RatVector> nullspace() const {
        RatMatrix m(rows_.empty() ? 1 : rows_.size(), cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = rows_[i].second[j];
        return m.nullspace();
    }

   private:
    std::size_t cols_;
    std::vector<std::pair<std::size_t, RatVector>> rows_;
};

}  // namespace detail

// Nucleus: {n : [n,x,y] = [x,n,y] = [x,y,n] = 0 for all x,y}; exact nullspace
// over all basis pairs. Guarded: the dense triple loop is Θ(dim⁵).
inline std::vector<RatVector> nucleus(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    if (n > 32) throw resource_limit_error("nucleus computation limited to dim <= 32");
    detail::RowSpace rows(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Element ej = a->basis(j), ek = a->basis(k);
            Element ejk = ej * ek;
            for (std::size_t slot = 0; slot < 3; ++slot) {
                // Row r_m over the unknown coordinates n_m for each output
                // coordinate; built from associators with e_m in each slot.
                std::vector<RatVector> out(n, RatVector(n, Rational(0)));
                for (std::size_t m = 0; m < n; ++m) {
                    Element em = a->basis(m);
                    Element assoc =
                        slot == 0 ? associator(em, ej, ek)
                                  : (slot == 1 ? associator(ej, em, ek) : associator(ej, ek, em));
                    for (std::size_t l = 0; l < n; ++l) out[l][m] = assoc.coeffs[l];
                }
                for (auto& row : out) rows.add(std::move(row));
                if (rows.rank() == n) return {};
            }
        }
    return rows.nullspace();
}

// Center: nucleus elements that additionally commute with everything.
inline std::vector<RatVector> center(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    auto nuc = nucleus(a);
    if (nuc.empty()) return {};
    detail::RowSpace rows(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<RatVector> out(n, RatVector(n, Rational(0)));
        for (std::size_t m = 0; m < n; ++m) {
            Element com = commutator(a->basis(m), a->basis(j));
            for (std::size_t l = 0; l < n; ++l) out[l][m] = com.coeffs[l];
        }
        for (auto& row : out) rows.add(std::move(row));
    }
    auto comm = rows.nullspace();
    // Intersect span(nuc) with span(comm): solve for common vectors.
    RatMatrix m(n, nuc.size() + comm.size());
    for (std::size_t j = 0; j < nuc.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = nuc[j][i];
    for (std::size_t j = 0; j < comm.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, nuc.size() + j) = -comm[j][i];
    std::vector<RatVector> inter;
    for (const auto& ker : m.nullspace()) {
        RatVector v(n, Rational(0));
        for (std::size_t j = 0; j < nuc.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) v[i] += ker[j] * nuc[j][i];
        if (std::any_of(v.begin(), v.end(), [](const Rational& r) { return r != 0; }))
            inter.push_back(std::move(v));
    }
    return inter;
}

// Checks that the span of the given vectors is closed under the product.
inline bool spans_subalgebra(const AlgebraPtr& a, const std::vector<RatVector>& basis) {
    if (basis.empty()) return true;
    std::size_t n = a->dim();
    RatMatrix cols(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) cols(i, j) = basis[j][i];
    for (const auto& x : basis)
        for (const auto& y : basis) {
            Element p = a->element(x) * a->element(y);
            if (!cols.solve(p.coeffs)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Associative symmetric bilinear forms
// ---------------------------------------------------------------------------

struct BilinearFormSpace {
    std::vector<RatMatrix> basis;
    bool has_nondegenerate = false;
    std::optional<RatMatrix> nondegenerate_witness;
};

// Solution space of {B = Bᵀ, B(xy, z) = B(x, yz)}.
//
// For unital algebras the solve is reduced to a dim-dimensional one: any such
// form satisfies B(x,y) = f(xy) with f = B(unit, ·), and conversely every
// linear functional vanishing on all basis commutators and associators yields
// such a form. Without a unit, a direct elimination over the dim(dim+1)/2
// symmetric unknowns is used (guarded by a resource limit).
inline BilinearFormSpace find_associative_symmetric_forms(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    BilinearFormSpace out;
    std::vector<RatVector> functionals;
    if (a->unit_index()) {
        detail::RowSpace rows(n);
        for (std::size_t i = 0; i < n && rows.rank() < n; ++i)
            for (std::size_t j = 0; j < n && rows.rank() < n; ++j) {
                Element com = commutator(a->basis(i), a->basis(j));
                if (!com.is_zero()) rows.add(com.coeffs);
                for (std::size_t k = 0; k < n && rows.rank() < n; ++k) {
                    Element as = associator(a->basis(i), a->basis(j), a->basis(k));
                    if (!as.is_zero()) rows.add(as.coeffs);
                }
            }
        functionals = rows.nullspace();
        for (const auto& f : functionals) {
            RatMatrix b(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Rational s(0);
                    for (std::size_t k = 0; k < n; ++k)
                        if (a->c(i, j, k) != 0) s += a->c(i, j, k) * f[k];
                    b(i, j) = s;
                }
            out.basis.push_back(std::move(b));
        }
    } else {
        if (n > 16)
            throw resource_limit_error(
                "bilinear-form elimination without a unit limited to dim <= 16");
        // Unknowns: B_{pq} for p <= q.
        std::size_t unknowns = n * (n + 1) / 2;
        auto idx = [n](std::size_t p, std::size_t q) {
            if (p > q) std::swap(p, q);
            return p * n + q - p * (p + 1) / 2;
        };
        detail::RowSpace rows(unknowns);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    RatVector row(unknowns, Rational(0));
                    for (std::size_t m = 0; m < n; ++m) {
                        if (a->c(i, j, m) != 0) row[idx(m, k)] += a->c(i, j, m);
                        if (a->c(j, k, m) != 0) row[idx(i, m)] -= a->c(j, k, m);
                    }
                    rows.add(std::move(row));
                }
        for (const auto& sol : rows.nullspace()) {
            RatMatrix b(n, n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = p; q < n; ++q) b(p, q) = b(q, p) = sol[idx(p, q)];
            out.basis.push_back(std::move(b));
        }
    }
    // Deterministic small search for a nondegenerate combination.
    if (!out.basis.empty()) {
        std::vector<RatVector> combos;
        std::size_t s = out.basis.size();
        for (std::size_t i = 0; i < s; ++i) {
            RatVector c(s, Rational(0));
            c[i] = 1;
            combos.push_back(c);
        }
        // Weighted sums 1, 2, 3, … and 1, -2, 4, … across the whole basis.
        RatVector wsum(s), walt(s);
        for (std::size_t i = 0; i < s; ++i) {
            wsum[i] = Rational(static_cast<long>(i + 1));
            walt[i] = Rational((i % 2 == 0) ? static_cast<long>(i + 1)
                                            : -static_cast<long>(i + 1));
        }
        combos.push_back(wsum);
        combos.push_back(walt);
        for (const auto& combo : combos) {
            RatMatrix cand(n, n);
            for (std::size_t i = 0; i < s; ++i)
                if (combo[i] != 0) cand = cand + combo[i] * out.basis[i];
            if (cand.det() != 0) {
                out.has_nondegenerate = true;
                out.nondegenerate_witness = std::move(cand);
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Idempotents / Peirce decomposition
// ---------------------------------------------------------------------------

inline bool is_idempotent(const Element& e) { return !e.is_zero() && e * e == e; }

// Best-effort budgeted search: scaled basis vectors and two-element rational
// combinations on a small coefficient grid.
inline std::vector<Element> idempotents_search(const AlgebraPtr& a, std::size_t budget = 10000) {
    std::vector<Element> found;
    auto consider = [&](const Element& e) {
        if (!is_idempotent(e)) return;
        if (std::find(found.begin(), found.end(), e) == found.end()) found.push_back(e);
    };
    std::size_t n = a->dim();
    std::size_t used = 0;
    if (a->unit_index()) consider(a->unit());
    for (std::size_t i = 0; i < n && used < budget; ++i, ++used) {
        Element ei = a->basis(i);
        Element sq = ei * ei;
        consider(ei);
        // If e² = αe with α ≠ 0 then e/α is idempotent.
        for (std::size_t k = 0; k < n; ++k)
            if (ei.coeffs[k] == 1 && sq.coeffs[k] != 0) {
                bool proportional = true;
                Rational alpha = sq.coeffs[k];
                for (std::size_t l = 0; l < n; ++l)
                    if (sq.coeffs[l] != alpha * ei.coeffs[l]) proportional = false;
                if (proportional) consider(Rational(1) / alpha * ei);
            }
    }
    const Rational grid[] = {Rational(1),     Rational(-1),    Rational(1, 2),
                             Rational(-1, 2), Rational(2),     Rational(-2),
                             Rational(1, 4),  Rational(-1, 4), Rational(3, 2)};
    for (std::size_t i = 0; i < n && used < budget; ++i)
        for (std::size_t j = i + 1; j < n && used < budget; ++j)
            for (const auto& alpha : grid)
                for (const auto& beta : grid) {
                    if (++used > budget) break;
                    consider(alpha * a->basis(i) + beta * a->basis(j));
                }
    return found;
}

struct PeirceDecomposition {
    // (eigenvalue, eigenspace basis) pairs for each rational eigenvalue of L(e).
    std::vector<std::pair<Rational, std::vector<RatVector>>> eigenspaces;
    bool fully_resolved = false;  // eigenspace dims sum to dim (all eigenvalues rational)
};

// Matrix of left multiplication by x.
inline RatMatrix left_matrix(const Element& x) {
    std::size_t n = x.algebra->dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Element col = x * x.algebra->basis(j);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coeffs[i];
    }
    return m;
}

inline RatMatrix right_matrix(const Element& x) {
    std::size_t n = x.algebra->dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Element col = x.algebra->basis(j) * x;
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coeffs[i];
    }
    return m;
}

// Minimal polynomial of a square matrix (monic, low degree first), by exact
// linear dependence of its powers.
inline RatVector matrix_min_poly(const RatMatrix& m) {
    std::size_t n = m.rows();
    std::vector<RatMatrix> powers{RatMatrix::identity(n)};
    detail::RowSpace rows(n * n);
    auto flatten = [n](const RatMatrix& x) {
        RatVector v(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = x(i, j);
        return v;
    };
    for (std::size_t d = 0;; ++d) {
        // Dependence test: is powers[d] in the span of the previous ones?
        RatMatrix cols(n * n, d);
        for (std::size_t c = 0; c < d; ++c) {
            RatVector f = flatten(powers[c]);
            for (std::size_t r = 0; r < n * n; ++r) cols(r, c) = f[r];
        }
        auto sol = cols.solve(flatten(powers[d]));
        if (sol) {
            RatVector poly(d + 1, Rational(0));
            for (std::size_t c = 0; c < d; ++c) poly[c] = -(*sol)[c];
            poly[d] = 1;
            return poly;
        }
        powers.push_back(m * powers[d]);
    }
}

inline PeirceDecomposition peirce(const AlgebraPtr& a, const Element& e) {
    if (e.algebra != a) throw algebra_mismatch_error();
    if (!is_idempotent(e)) throw not_idempotent_error();
    RatMatrix L = left_matrix(e);
    RatVector mp = matrix_min_poly(L);
    RationalRoots roots = rational_roots(mp);
    PeirceDecomposition out;
    std::size_t total = 0;
    for (const auto& lambda : roots.roots) {
        RatMatrix shifted = L;
        for (std::size_t i = 0; i < L.rows(); ++i) shifted(i, i) -= lambda;
        auto space = shifted.nullspace();
        total += space.size();
        out.eigenspaces.emplace_back(lambda, std::move(space));
    }
    out.fully_resolved = roots.splits_completely && total == a->dim();
    return out;
}

// ---------------------------------------------------------------------------
// Minimal polynomial of an element
// ---------------------------------------------------------------------------

// Monic polynomial of least degree with f(x) = 0 (coefficients low first).
// Precondition enforced exactly: the power chain x^i x^j = x^{i+j} holds for
// all i+j <= dmax (otherwise the powers are ambiguous).
inline RatVector minimal_polynomial(const Element& x, std::size_t dmax) {
    const auto& a = x.algebra;
    if (!a->unit_index()) throw no_unit_error();
    std::vector<Element> pw{a->unit(), x};
    for (std::size_t d = 2; d <= dmax; ++d) pw.push_back(pw[d - 1] * x);
    for (std::size_t i = 1; i <= dmax; ++i)
        for (std::size_t j = 1; i + j <= dmax; ++j)
            if (!(pw[i] * pw[j] == pw[i + j]))
                throw not_power_associative_error(static_cast<int>(i), static_cast<int>(j));
    std::size_t n = a->dim();
    for (std::size_t d = 1; d <= dmax; ++d) {
        RatMatrix cols(n, d);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < n; ++r) cols(r, c) = pw[c].coeffs[r];
        auto sol = cols.solve(pw[d].coeffs);
        if (sol) {
            RatVector poly(d + 1, Rational(0));
            for (std::size_t c = 0; c < d; ++c) poly[c] = -(*sol)[c];
            poly[d] = 1;
            return poly;
        }
    }
    throw degree_exceeded_error();
}

// ---------------------------------------------------------------------------
// Derivations
// ---------------------------------------------------------------------------

// Leibniz check D(xy) = D(x)y + xD(y) on all basis pairs.
inline bool derivation_check(const AlgebraPtr& a, const RatMatrix& d) {
    std::size_t n = a->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element ei = a->basis(i), ej = a->basis(j);
            Element lhs = a->element(d.apply((ei * ej).coeffs));
            Element rhs = a->element(d.apply(ei.coeffs)) * ej + ei * a->element(d.apply(ej.coeffs));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

inline bool in_nucleus(const Element& x) {
    const auto& a = x.algebra;
    std::size_t n = a->dim();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Element ej = a->basis(j), ek = a->basis(k);
            if (!associator(x, ej, ek).is_zero()) return false;
            if (!associator(ej, x, ek).is_zero()) return false;
            if (!associator(ej, ek, x).is_zero()) return false;
        }
    return true;
}

// ad_a = L(a) − R(a) for a in the nucleus; guaranteed to pass derivation_check.
inline RatMatrix ad_nucleus_derivation(const Element& a) {
    if (!in_nucleus(a)) throw not_in_nucleus_error();
    return left_matrix(a) - right_matrix(a);
}

// ---------------------------------------------------------------------------
// Formal-reality probe
// ---------------------------------------------------------------------------

struct RealityVerdict {
    bool violation_found = false;
    bool semi_formal_violation = false;  // some x_i² ≠ 0 in a vanishing square sum
    std::vector<Element> witness;
};

// Draws a random element with coefficients p/q, p ∈ {−9…9}, q ∈ {1…9}.
inline Element random_element(const AlgebraPtr& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    RatVector v(a->dim());
    for (auto& x : v) x = make_rational(num(rng), den(rng));
    return a->element(std::move(v));
}

// Searches small-support tuples and randomized tuples for Σ xᵢ² = 0 with
// nonzero xᵢ. Evidence-only: a clean pass proves nothing.
inline RealityVerdict formal_reality_probe(const AlgebraPtr& a, std::size_t budget = 2000,
                                           std::uint64_t seed = 1) {
    RealityVerdict v;
    std::size_t n = a->dim();
    auto record = [&](std::vector<Element> xs) {
        v.violation_found = true;
        v.semi_formal_violation =
            std::any_of(xs.begin(), xs.end(), [](const Element& x) { return !(x * x).is_zero(); });
        v.witness = std::move(xs);
    };
    // Singletons: x² = 0 with x ≠ 0.
    for (std::size_t i = 0; i < n; ++i) {
        Element e = a->basis(i);
        if ((e * e).is_zero()) {
            record({e});
            return v;
        }
    }
    // Pairs of basis vectors with opposite squares, allowing integer scaling.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Element si = a->basis(i) * a->basis(i);
            for (long s = 1; s <= 3; ++s) {
                Element x = Rational(s) * a->basis(j);
                if ((si + x * x).is_zero()) {
                    record({a->basis(i), x});
                    return v;
                }
            }
        }
    // Randomized pairs/triples: look for Σx² = 0 by solving nothing — just
    // test scaled sums of random elements whose squares happen to cancel.
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < budget; ++trial) {
        Element x = random_element(a, rng);
        Element y = random_element(a, rng);
        if (!x.is_zero() && !y.is_zero() && (x * x + y * y).is_zero()) {
            record({x, y});
            return v;
        }
    }
    return v;
}

}  // namespace nonassoc
