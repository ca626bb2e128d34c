#include "langweil/plane.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace lw {

int rref(std::vector<std::vector<Elem>>& rows, const Field& field) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Elem scale = field.inv(rows[rank][col]);
        for (std::size_t j = col; j < ncols; ++j)
            rows[rank][j] = field.mul(rows[rank][j], scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Elem factor = rows[r][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[r][j] = field.sub(rows[r][j], field.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

int pivot_column(const std::vector<Elem>& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j]) return static_cast<int>(j);
    return -1;
}

}  // namespace

PlaneFrame canonicalize(PlaneFrame frame, const Field& field) {
    std::size_t want = frame.setting == Setting::affine ? 2 : 3;
    int rank = rref(frame.rows, field);
    if (frame.rows.size() != want || rank != static_cast<int>(want))
        throw DimensionMismatch("plane frame directions must have full rank");
    if (frame.setting == Setting::affine) {
        if (static_cast<int>(frame.base.size()) != frame.n)
            throw DimensionMismatch("affine plane frame needs a base point");
        // Zero out the pivot coordinates of the base point by subtracting
        // direction rows; the result is the unique coset representative.
        for (const auto& row : frame.rows) {
            int c = pivot_column(row);
            Elem v = frame.base[c];
            if (!v) continue;
            for (int j = 0; j < frame.n; ++j)
                frame.base[j] = field.sub(frame.base[j], field.mul(v, row[j]));
        }
    } else {
        frame.base.clear();
    }
    frame.canonical = true;
    return frame;
}

namespace {

mpz_class gauss_binom(int n, int k, std::uint64_t q) {
    mpz_class num = 1, den = 1, qz(static_cast<unsigned long>(q));
    for (int i = 0; i < k; ++i) {
        mpz_class qn, qk;
        mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n - i));
        mpz_pow_ui(qk.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(k - i));
        num *= qn - 1;
        den *= qk - 1;
    }
    return num / den;
}

mpz_class plane_census(int n, std::uint64_t q, Setting setting) {
    if (setting == Setting::projective) return gauss_binom(n + 1, 3, q);
    mpz_class shift, qz(static_cast<unsigned long>(q));
    mpz_pow_ui(shift.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n - 2));
    return shift * gauss_binom(n, 2, q);
}

// Enumerate all functions {free positions} -> F_q by an odometer, invoking
// the sink with the current assignment.
template <typename Sink>
void odometer(std::size_t count, std::uint64_t q, std::vector<Elem>& vals, Sink&& sink) {
    vals.assign(count, 0);
    while (true) {
        sink(vals);
        std::size_t i = 0;
        while (i < count && ++vals[i] == q) vals[i++] = 0;
        if (i == count) break;
    }
}

}  // namespace

std::vector<PlaneFrame> enumerate_planes(int n, const FieldPtr& field, Setting setting,
                                         std::uint64_t work_cap) {
    if (n < 2) throw DimensionMismatch("ambient dimension too small to contain planes");
    std::uint64_t q = field->q();
    mpz_class census = plane_census(n, q, setting);
    if (census > mpz_class(static_cast<unsigned long>(work_cap)))
        throw WorkCapExceeded(census.fits_ulong_p() ? census.get_ui() : UINT64_MAX, work_cap);

    std::vector<PlaneFrame> out;
    out.reserve(census.get_ui());
    int nrows = setting == Setting::affine ? 2 : 3;
    int ncols = setting == Setting::affine ? n : n + 1;

    // RREF pivot patterns: strictly increasing pivot columns; every entry to
    // the right of a row's pivot is free unless it sits in a pivot column.
    std::vector<int> pivots(nrows);
    auto emit_pattern = [&]() {
        // Free positions in the direction matrix.
        std::vector<std::pair<int, int>> dir_free;
        for (int r = 0; r < nrows; ++r)
            for (int j = pivots[r] + 1; j < ncols; ++j)
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                    dir_free.emplace_back(r, j);
        // Free base coordinates (affine): everything off the pivot columns.
        std::vector<int> base_free;
        if (setting == Setting::affine)
            for (int j = 0; j < n; ++j)
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                    base_free.push_back(j);

        std::vector<Elem> dvals, bvals;
        odometer(dir_free.size(), q, dvals, [&](const std::vector<Elem>& dv) {
            PlaneFrame proto;
            proto.setting = setting;
            proto.n = n;
            proto.rows.assign(nrows, std::vector<Elem>(ncols, 0));
            for (int r = 0; r < nrows; ++r) proto.rows[r][pivots[r]] = field->one();
            for (std::size_t i = 0; i < dir_free.size(); ++i)
                proto.rows[dir_free[i].first][dir_free[i].second] = dv[i];
            proto.canonical = true;
            if (setting == Setting::projective) {
                out.push_back(std::move(proto));
                return;
            }
            proto.base.assign(n, 0);
            odometer(base_free.size(), q, bvals, [&](const std::vector<Elem>& bv) {
                PlaneFrame frame = proto;
                for (std::size_t i = 0; i < base_free.size(); ++i)
                    frame.base[base_free[i]] = bv[i];
                out.push_back(std::move(frame));
            });
        });
    };

    // Iterate strictly increasing pivot tuples.
    for (int i = 0; i < nrows; ++i) pivots[i] = i;
    while (true) {
        emit_pattern();
        int i = nrows - 1;
        while (i >= 0 && pivots[i] == ncols - nrows + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < nrows; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

PlaneFrame sample_plane(int n, const FieldPtr& field, Setting setting, SplitRng& rng) {
    if (n < 2) throw DimensionMismatch("ambient dimension too small to contain planes");
    std::uint64_t q = field->q();
    int nrows = setting == Setting::affine ? 2 : 3;
    int ncols = setting == Setting::affine ? n : n + 1;
    while (true) {
        PlaneFrame frame;
        frame.setting = setting;
        frame.n = n;
        frame.rows.assign(nrows, std::vector<Elem>(ncols));
        for (auto& row : frame.rows)
            for (auto& v : row) v = static_cast<Elem>(rng.next_below(q));
        if (setting == Setting::affine) {
            frame.base.resize(n);
            for (auto& v : frame.base) v = static_cast<Elem>(rng.next_below(q));
        }
        auto probe = frame.rows;
        if (rref(probe, *field) != nrows) continue;  // rejection keeps the draw uniform
        return canonicalize(std::move(frame), *field);
    }
}

}  // namespace lw
