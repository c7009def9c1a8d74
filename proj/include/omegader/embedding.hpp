#pragma once

// The doubled algebra construction and the embedding of quasiderivations as
// derivations of it.  The double of an n-dimensional algebra L lives on
// L*t + L*t^2 with [x*t, y*t] = [x,y]*t^2 and all other products zero; the
// bilinear form pairs only the t-slots.  A quasiderivation pair (f, f')
// embeds as f on the t-slots and f' on the bracket-span part of the
// t^2-slots (zero on the chosen complement).

#include "omegader/algebra.hpp"
#include "omegader/linalg.hpp"
#include "omegader/scalar.hpp"
#include "omegader/spaces.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace omegader {

class invalid_quasiderivation_pair : public std::invalid_argument {
public:
    invalid_quasiderivation_pair()
        : std::invalid_argument("pair does not satisfy the quasiderivation identity") {}
};

struct DoubledAlgebra {
    AlgebraSpec base;
    AlgebraSpec doubled;           // dim 2n; slots [0,n) are x_i*t, [n,2n) are x_i*t^2
    Subspace derived;              // bracket span [L,L] inside the base
    std::vector<int> complement;   // standard-basis indices spanning a complement of [L,L]
    Mat derived_projection;        // projection of the base onto [L,L] along the complement

    int n() const { return base.dim(); }
};

/// Builds the doubled algebra.  The complement of the bracket span defaults
/// to the deterministic greedy extension by standard basis vectors in index
/// order; an explicit set of standard-basis indices may be supplied instead
/// (it must complete the bracket span to the whole base).
inline DoubledAlgebra build_doubled(const AlgebraSpec& a, std::vector<int> complement = {}) {
    require_structural(a);
    const int n = a.dim();
    DoubledAlgebra d;
    d.base = a;
    d.derived = derived_subalgebra(a);
    if (complement.empty()) {
        d.complement = greedy_complement_indices(d.derived);
    } else {
        if (int(complement.size()) != n - d.derived.dim())
            throw dimension_mismatch("complement has wrong size");
        d.complement = std::move(complement);
    }

    std::vector<std::string> names;
    for (int j = 1; j <= 2; ++j)
        for (int i = 0; i < n; ++i)
            names.push_back(a.basis_names()[std::size_t(i)] + (j == 1 ? "*t" : "*t^2"));
    AlgebraSpec dbl(a.name() + "~", std::move(names));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec out(static_cast<std::size_t>(2 * n));
            for (int k = 0; k < n; ++k) out[std::size_t(n + k)] = a.c(i, j, k);
            dbl.set_bracket(i, j, out);
            dbl.set_omega(i, j, a.omega(i, j));
        }
    d.doubled = std::move(dbl);

    const int dd = d.derived.dim();
    Mat basis_change(n, n);
    for (int t = 0; t < dd; ++t) {
        Vec b = d.derived.basis_vector(t);
        for (int r = 0; r < n; ++r) basis_change.at(r, t) = b[std::size_t(r)];
    }
    for (std::size_t u = 0; u < d.complement.size(); ++u)
        basis_change.at(d.complement[u], dd + int(u)) = Scalar(1);
    Mat selector(n, n);
    for (int t = 0; t < dd; ++t) selector.at(t, t) = Scalar(1);
    d.derived_projection = basis_change * selector * invert_matrix(basis_change);
    return d;
}

/// The embedded map of a quasiderivation pair: f on the t-slots, the
/// associate on the bracket-span part of the t^2-slots, zero on the
/// complement part.  Only the restriction of the associate to the bracket
/// span enters, so the image is independent of the witness choice.
inline Mat delta_u(const DoubledAlgebra& d, const QDerPair& p) {
    const int n = d.n();
    if (p.f.rows() != n || p.assoc.rows() != n)
        throw dimension_mismatch("pair size does not match the base algebra");
    if (!satisfies_quasider_identity(d.base, p.f, p.assoc))
        throw invalid_quasiderivation_pair();
    Mat t2_block = p.assoc * d.derived_projection;
    Mat out(2 * n, 2 * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            out.at(r, c) = p.f.at(r, c);
            out.at(n + r, n + c) = t2_block.at(r, c);
        }
    return out;
}

inline Mat delta_u(const DoubledAlgebra& d, const Mat& f) {
    return delta_u(d, canonical_associate(d.base, f));
}

/// Every embedded quasiderivation acts as a derivation of the double, and it
/// is compatible there exactly when the original map is compatible.
inline CheckReport check_embedded_derivations(const AlgebraSpec& a) {
    CheckReport rep{"embedded maps are derivations"};
    DoubledAlgebra d = build_doubled(a);
    DerSpace qd = compute_space(a, SpaceKind::qder);
    int compatible = 0, incompatible = 0;
    for (const Mat& f : qd.f_basis_matrices()) {
        Mat m = delta_u(d, f);
        if (!is_derivation_map(d.doubled, m)) rep.fail("embedded basis map is not a derivation");
        bool base_c = is_compatible_map(a, f);
        bool dbl_c = is_compatible_map(d.doubled, m);
        (base_c ? compatible : incompatible) += 1;
        if (base_c != dbl_c) rep.fail("compatibility does not transfer through the embedding");
    }
    rep.note("witnesses: " + std::to_string(compatible) + " compatible, " +
             std::to_string(incompatible) + " incompatible");
    if (incompatible == 0) rep.note("no incompatible witnesses in this basis");
    return rep;
}

/// The embedding is linear, injective, and sends commutators of pairs to
/// commutators of images.
inline CheckReport check_embedding_homomorphism(const AlgebraSpec& a) {
    CheckReport rep{"embedding is an injective homomorphism"};
    DoubledAlgebra d = build_doubled(a);
    DerSpace qd = compute_space(a, SpaceKind::qder);
    std::vector<Mat> basis = qd.f_basis_matrices();
    std::vector<Mat> images;
    for (const Mat& f : basis) images.push_back(delta_u(d, f));

    Scalar two(2), iu = Scalar::i();
    for (std::size_t p = 0; p < basis.size(); ++p)
        for (std::size_t q = 0; q < basis.size(); ++q) {
            Mat combo = two * basis[p] + iu * basis[q];
            if (!(delta_u(d, combo) == two * images[p] + iu * images[q])) {
                rep.fail("embedding is not linear");
                break;
            }
        }

    std::vector<Vec> rows;
    for (const Mat& m : images) rows.push_back(mat_to_rowmajor(m));
    if (Subspace::span(4 * a.dim() * a.dim(), rows).dim() != qd.f_dim())
        rep.fail("embedding is not injective on the quasiderivation space");

    for (std::size_t p = 0; p < basis.size(); ++p)
        for (std::size_t q = 0; q < basis.size(); ++q) {
            QDerPair fp = canonical_associate(a, basis[p]);
            QDerPair gp = canonical_associate(a, basis[q]);
            QDerPair bracket_pair{commutator(fp.f, gp.f), commutator(fp.assoc, gp.assoc)};
            if (!(delta_u(d, bracket_pair) == commutator(images[p], images[q])))
                rep.fail("embedding does not preserve the commutator at basis " +
                         std::to_string(p) + "," + std::to_string(q));
        }
    return rep;
}

/// With trivial center, the compatible derivations of the double decompose
/// as the embedded compatible quasiderivations plus the central derivations
/// of the double: zero intersection, full sum, and the central part is an
/// ideal consisting of compatible maps.
inline CheckReport check_semidirect_decomposition(const AlgebraSpec& a,
                                                  std::vector<int> complement = {}) {
    CheckReport rep{"semidirect decomposition of compatible derivations"};
    if (center(a).dim() != 0) {
        rep.applicable = false;
        rep.note("center of " + a.name() + " is nonzero; decomposition not applicable");
        return rep;
    }
    DoubledAlgebra d = build_doubled(a, std::move(complement));
    DerSpace der_c = compute_space(d.doubled, SpaceKind::der_c);
    DerSpace zd = compute_space(d.doubled, SpaceKind::zder);
    DerSpace qd_c = compute_space(a, SpaceKind::qder_c);

    std::vector<Vec> rows;
    for (const Mat& f : qd_c.f_basis_matrices()) rows.push_back(mat_to_rowmajor(delta_u(d, f)));
    Subspace image = Subspace::span(4 * a.dim() * a.dim(), rows);

    if (image.dim() != qd_c.f_dim()) rep.fail("embedded image lost dimension");
    if (subspace_intersect(image, zd.f_space).dim() != 0)
        rep.fail("embedded image meets the central derivations");
    if (!(subspace_sum(image, zd.f_space) == der_c.f_space))
        rep.fail("image + central derivations != compatible derivations of the double");
    bool ideal_ok = true;
    for (const Mat& b : der_c.f_basis_matrices())
        for (const Mat& z : zd.f_basis_matrices())
            if (ideal_ok && !zd.f_space.contains(mat_to_rowmajor(commutator(b, z)))) {
                rep.fail("central derivations are not an ideal");
                ideal_ok = false;
            }
    for (const Mat& z : zd.f_basis_matrices())
        if (!is_compatible_map(d.doubled, z)) rep.fail("central derivation is not compatible");
    rep.note("dims: der_c(double) " + std::to_string(der_c.f_dim()) + " = qder_c(base) " +
             std::to_string(qd_c.f_dim()) + " + zder(double) " + std::to_string(zd.f_dim()));
    return rep;
}

}  // namespace omegader
