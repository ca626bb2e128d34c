#pragma once

#include <cstdint>
#include <vector>

#include "langweil/gf.hpp"
#include "langweil/mpoly.hpp"
#include "langweil/rng.hpp"

namespace lw {

/// Canonical representation of a plane: a 2-dimensional affine linear
/// subvariety of A^n, or a 2-dimensional projective linear subspace of P^n
/// (a 3-dimensional linear subspace of F_q^{n+1}).
///
/// The canonical form is the reduced-row-echelon basis of the direction span
/// (affine) or of the subspace (projective); the affine base point is the
/// unique coset representative with zeros in the pivot columns.  Two frames
/// describe the same plane iff their canonical forms are identical.
struct PlaneFrame {
    Setting setting;
    int n;  // ambient dimension
    std::vector<std::vector<Elem>> rows;  // affine: 2 x n; projective: 3 x (n+1)
    std::vector<Elem> base;               // affine only, length n
    bool canonical = false;

    bool operator==(const PlaneFrame& o) const {
        return setting == o.setting && n == o.n && rows == o.rows && base == o.base;
    }
    bool operator<(const PlaneFrame& o) const {
        if (rows != o.rows) return rows < o.rows;
        return base < o.base;
    }
};

/// Row-reduce in place; returns the rank.
int rref(std::vector<std::vector<Elem>>& rows, const Field& field);

/// Canonical form of a frame (RREF directions, reduced base point).
PlaneFrame canonicalize(PlaneFrame frame, const Field& field);

/// All distinct planes in canonical form.  Affine census is
/// q^{n-2} * qbinom(n, 2); projective census is qbinom(n+1, 3).
std::vector<PlaneFrame> enumerate_planes(int n, const FieldPtr& field, Setting setting,
                                         std::uint64_t work_cap = 10'000'000);

/// Uniform draw over distinct planes (rejection-sampled full-rank frame,
/// then canonicalization).
PlaneFrame sample_plane(int n, const FieldPtr& field, Setting setting, SplitRng& rng);

}  // namespace lw
