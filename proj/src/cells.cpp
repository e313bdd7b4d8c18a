// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include "twohilb/cells.hpp"

#include <limits>
#include <sstream>

namespace twohilb {

namespace {

std::string obj_name(TwoHilbObject a) { return "Hilb^" + std::to_string(a.size); }

std::string cell_type(const OneCell& f) {
    return obj_name(f.source()) + " -> " + obj_name(f.target());
}

}  // namespace

OneCell::OneCell(TwoHilbObject source, TwoHilbObject target, std::vector<std::vector<int>> dims)
    : source_(source), target_(target) {
    if (static_cast<int>(dims.size()) != target_.size)
        throw std::invalid_argument("dims must have target.size rows");
    dims_.reserve(static_cast<size_t>(rows()) * cols());
    for (const auto& row : dims) {
        if (static_cast<int>(row.size()) != source_.size)
            throw std::invalid_argument("dims must have source.size columns");
        for (int d : row) {
            if (d < 0) throw std::invalid_argument("negative dimension entry");
            dims_.push_back(d);
        }
    }
}

OneCell OneCell::identity(TwoHilbObject a) {
    std::vector<std::vector<int>> dims(a.size, std::vector<int>(a.size, 0));
    for (int i = 0; i < a.size; ++i) dims[i][i] = 1;
    return OneCell(a, a, std::move(dims));
}

OneCell OneCell::scalar(int d) {
    return OneCell(TwoHilbObject(1), TwoHilbObject(1), {{d}});
}

TwoCell::TwoCell(OneCell source, OneCell target, std::vector<ComplexMatrix> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (source_.source() != target_.source() || source_.target() != target_.target())
        throw TypeError("2-cell boundary 1-cells must be parallel: " + cell_type(source_) +
                        " vs " + cell_type(target_));
    if (entries_.size() != static_cast<size_t>(rows()) * cols())
        throw std::invalid_argument("entry count does not match boundary shape");
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            const ComplexMatrix& e = entry(i, j);
            if (e.rows() != target_.dim(i, j) || e.cols() != source_.dim(i, j))
                throw std::invalid_argument(
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") has shape " +
                    std::to_string(e.rows()) + "x" + std::to_string(e.cols()) + ", expected " +
                    std::to_string(target_.dim(i, j)) + "x" + std::to_string(source_.dim(i, j)));
        }
}

OneCell hcomp1(const OneCell& g, const OneCell& f) {
    if (f.target() != g.source())
        throw TypeError("cannot compose 1-cells: inner " + cell_type(f) + " with outer " +
                        cell_type(g));
    std::vector<std::vector<int>> dims(g.rows(), std::vector<int>(f.cols(), 0));
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) {
            int s = 0;
            for (int k = 0; k < g.cols(); ++k) s += g.dim(i, k) * f.dim(k, j);
            dims[i][j] = s;
        }
    return OneCell(f.source(), g.target(), std::move(dims));
}

OneCell adjoint1(const OneCell& f) {
    std::vector<std::vector<int>> dims(f.cols(), std::vector<int>(f.rows(), 0));
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) dims[j][i] = f.dim(i, j);
    return OneCell(f.target(), f.source(), std::move(dims));
}

TwoCell identity_2(const OneCell& f) {
    std::vector<ComplexMatrix> entries;
    entries.reserve(static_cast<size_t>(f.rows()) * f.cols());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) entries.push_back(ComplexMatrix::identity(f.dim(i, j)));
    return TwoCell(f, f, std::move(entries));
}

TwoCell hcomp2(const TwoCell& beta, const TwoCell& alpha) {
    if (alpha.source().target() != beta.source().source())
        throw TypeError("cannot compose 2-cells horizontally: inner boundary " +
                        cell_type(alpha.source()) + " does not meet outer boundary " +
                        cell_type(beta.source()));
    OneCell src = hcomp1(beta.source(), alpha.source());
    OneCell tgt = hcomp1(beta.target(), alpha.target());
    std::vector<ComplexMatrix> entries;
    entries.reserve(static_cast<size_t>(src.rows()) * src.cols());
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) {
            std::vector<ComplexMatrix> blocks;
            blocks.reserve(beta.cols());
            for (int k = 0; k < beta.cols(); ++k)
                blocks.push_back(kron(beta.entry(i, k), alpha.entry(k, j)));
            entries.push_back(direct_sum(blocks));
        }
    return TwoCell(std::move(src), std::move(tgt), std::move(entries));
}

TwoCell vcomp(const TwoCell& beta, const TwoCell& alpha) {
    if (!(alpha.target() == beta.source()))
        throw TypeError("cannot compose 2-cells vertically: middle boundaries differ (" +
                        cell_type(alpha.target()) + ")");
    std::vector<ComplexMatrix> entries;
    entries.reserve(static_cast<size_t>(alpha.rows()) * alpha.cols());
    for (int i = 0; i < alpha.rows(); ++i)
        for (int j = 0; j < alpha.cols(); ++j)
            entries.push_back(beta.entry(i, j) * alpha.entry(i, j));
    return TwoCell(alpha.source(), beta.target(), std::move(entries));
}

TwoCell dagger2(const TwoCell& alpha) {
    std::vector<ComplexMatrix> entries;
    entries.reserve(static_cast<size_t>(alpha.rows()) * alpha.cols());
    for (int i = 0; i < alpha.rows(); ++i)
        for (int j = 0; j < alpha.cols(); ++j) entries.push_back(dagger(alpha.entry(i, j)));
    return TwoCell(alpha.target(), alpha.source(), std::move(entries));
}

TwoCell scalar_mul(Complex c, const TwoCell& alpha) {
    std::vector<ComplexMatrix> entries;
    entries.reserve(static_cast<size_t>(alpha.rows()) * alpha.cols());
    for (int i = 0; i < alpha.rows(); ++i)
        for (int j = 0; j < alpha.cols(); ++j) entries.push_back(c * alpha.entry(i, j));
    return TwoCell(alpha.source(), alpha.target(), std::move(entries));
}

double max_entry_diff(const TwoCell& a, const TwoCell& b) {
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
        return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m = std::max(m, max_abs_diff(a.entry(i, j), b.entry(i, j)));
    return m;
}

bool eq2(const TwoCell& a, const TwoCell& b, double tol) {
    return max_entry_diff(a, b) <= tol;
}

std::pair<TwoCell, TwoCell> adjunction_cells(const OneCell& f) {
    const OneCell fdag = adjoint1(f);
    const int m = f.rows(), n = f.cols();

    // sigma: id_source => f^ o f. Diagonal entry (j,j) stacks, over the
    // middle index i in increasing order, the unit 1 |-> sum_a |a>(x)|a>.
    OneCell sigma_src = OneCell::identity(f.source());
    OneCell sigma_tgt = hcomp1(fdag, f);
    std::vector<ComplexMatrix> sigma_entries;
    for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2) {
            if (j1 != j2) {
                sigma_entries.push_back(ComplexMatrix(sigma_tgt.dim(j1, j2), 0));
                continue;
            }
            std::vector<ComplexMatrix> blocks;
            for (int i = 0; i < m; ++i) {
                const int d = f.dim(i, j1);
                ComplexMatrix eta(d * d, 1);
                for (int a = 0; a < d; ++a) eta(a * d + a, 0) = 1.0;
                blocks.push_back(eta);
            }
            sigma_entries.push_back(vstack(blocks));
        }
    TwoCell sigma(sigma_src, sigma_tgt, std::move(sigma_entries));

    // tau: f o f^ => id_target. Diagonal entry (i,i) concatenates, over the
    // middle index j in increasing order, the counit <a|b>.
    OneCell tau_src = hcomp1(f, fdag);
    OneCell tau_tgt = OneCell::identity(f.target());
    std::vector<ComplexMatrix> tau_entries;
    for (int i1 = 0; i1 < m; ++i1)
        for (int i2 = 0; i2 < m; ++i2) {
            if (i1 != i2) {
                tau_entries.push_back(ComplexMatrix(0, tau_src.dim(i1, i2)));
                continue;
            }
            std::vector<ComplexMatrix> blocks;
            for (int j = 0; j < n; ++j) {
                const int d = f.dim(i1, j);
                ComplexMatrix eps(1, d * d);
                for (int a = 0; a < d; ++a) eps(0, a * d + a) = 1.0;
                blocks.push_back(eps);
            }
            tau_entries.push_back(hstack(blocks));
        }
    TwoCell tau(std::move(tau_src), std::move(tau_tgt), std::move(tau_entries));

    return {std::move(sigma), std::move(tau)};
}

TwoCell associator(const OneCell& f, const OneCell& g, const OneCell& h) {
    if (f.target() != g.source() || g.target() != h.source())
        throw TypeError("associator requires a composable chain");
    OneCell src = hcomp1(hcomp1(h, g), f);
    OneCell tgt = hcomp1(h, hcomp1(g, f));
    const int nb = g.cols();  // middle object between f and g
    const int nc = h.cols();  // middle object between g and h

    std::vector<ComplexMatrix> entries;
    for (int l = 0; l < h.rows(); ++l)
        for (int j = 0; j < f.cols(); ++j) {
            const int total = src.dim(l, j);
            ComplexMatrix perm(total, total);
            // Left bracketing enumerates (b, c, xh, xg, xf); right
            // bracketing enumerates (c, xh, b, xg, xf). Both in increasing
            // lexicographic order.
            int left = 0;
            for (int b = 0; b < nb; ++b)
                for (int c = 0; c < nc; ++c)
                    for (int xh = 0; xh < h.dim(l, c); ++xh)
                        for (int xg = 0; xg < g.dim(c, b); ++xg)
                            for (int xf = 0; xf < f.dim(b, j); ++xf) {
                                // Right index of tuple (c, xh, b, xg, xf).
                                int right = 0;
                                for (int c2 = 0; c2 < c; ++c2) {
                                    int inner = 0;
                                    for (int b2 = 0; b2 < nb; ++b2)
                                        inner += g.dim(c2, b2) * f.dim(b2, j);
                                    right += h.dim(l, c2) * inner;
                                }
                                int inner_c = 0;
                                for (int b2 = 0; b2 < nb; ++b2)
                                    inner_c += g.dim(c, b2) * f.dim(b2, j);
                                right += xh * inner_c;
                                for (int b2 = 0; b2 < b; ++b2)
                                    right += g.dim(c, b2) * f.dim(b2, j);
                                right += xg * f.dim(b, j) + xf;
                                perm(right, left) = 1.0;
                                ++left;
                            }
            entries.push_back(std::move(perm));
        }
    return TwoCell(std::move(src), std::move(tgt), std::move(entries));
}

}  // namespace twohilb
