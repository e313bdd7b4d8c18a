// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include "twohilb/matrix.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <sstream>

namespace twohilb {

namespace {

using EigenCMat =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenCMat to_eigen(const ComplexMatrix& a) {
    EigenCMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    return m;
}

ComplexMatrix from_eigen(const EigenCMat& m) {
    ComplexMatrix a(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a(i, j) = m(i, j);
    return a;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    if (data_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match shape");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::basis_column(int d, int k) {
    ComplexMatrix m(d, 1);
    m(k, 0) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::ones_column(int d) {
    ComplexMatrix m(d, 1);
    for (int i = 0; i < d; ++i) m(i, 0) = 1.0;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows()) +
                                    "x" + std::to_string(a.cols()) + " * " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator*(Complex c, const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out(i, j) *= c;
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("matrix sum shape mismatch");
    ComplexMatrix c = a;
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a + (Complex(-1.0, 0.0) * b);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            const Complex v = a(i1, j1);
            if (v == Complex(0.0, 0.0)) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2)
                    c(i1 * b.rows() + i2, j1 * b.cols() + j2) = v * b(i2, j2);
        }
    return c;
}

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    ComplexMatrix c(rows, cols);
    int r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) c(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
    return c;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) c(i, j) = std::conj(c(i, j));
    return c;
}

ComplexMatrix vstack(const std::vector<ComplexMatrix>& blocks) {
    int rows = 0;
    int cols = blocks.empty() ? 0 : blocks.front().cols();
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
        rows += b.rows();
    }
    ComplexMatrix c(rows, cols);
    int r0 = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) c(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return c;
}

ComplexMatrix hstack(const std::vector<ComplexMatrix>& blocks) {
    int cols = 0;
    int rows = blocks.empty() ? 0 : blocks.front().rows();
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
        cols += b.cols();
    }
    ComplexMatrix c(rows, cols);
    int c0 = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) c(i, c0 + j) = b(i, j);
        c0 += b.cols();
    }
    return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

bool is_isometry(const ComplexMatrix& a, double tol) {
    return approx_eq(dagger(a) * a, ComplexMatrix::identity(a.cols()), tol);
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    return is_isometry(a, tol) &&
           approx_eq(a * dagger(a), ComplexMatrix::identity(a.rows()), tol);
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return {};
    Eigen::JacobiSVD<EigenCMat> svd(to_eigen(a));
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

ComplexMatrix nullspace_basis(const ComplexMatrix& a, double tol) {
    const int n = a.cols();
    if (n == 0) return ComplexMatrix(0, 0);
    ComplexMatrix basis(n, 0);
    if (a.rows() == 0) {
        basis = ComplexMatrix::identity(n);
    } else {
        Eigen::JacobiSVD<EigenCMat> svd(to_eigen(a), Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        int rank = 0;
        while (rank < sv.size() && sv(rank) > tol) ++rank;
        EigenCMat v = svd.matrixV();
        ComplexMatrix out(n, n - rank);
        for (int j = rank; j < n; ++j)
            for (int i = 0; i < n; ++i) out(i, j - rank) = v(i, j);
        basis = out;
    }
    // Fix column phases: largest-magnitude entry real positive.
    for (int j = 0; j < basis.cols(); ++j) {
        int imax = 0;
        double best = 0.0;
        for (int i = 0; i < basis.rows(); ++i) {
            double m = std::abs(basis(i, j));
            if (m > best + 1e-14) {
                best = m;
                imax = i;
            }
        }
        if (best > 0.0) {
            Complex phase = std::conj(basis(imax, j)) / best;
            for (int i = 0; i < basis.rows(); ++i) basis(i, j) *= phase;
        }
    }
    return basis;
}

ComplexMatrix tensor_swap(int d1, int d2) {
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("negative swap dimension");
    ComplexMatrix c(d1 * d2, d1 * d2);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b) c(b * d1 + a, a * d2 + b) = 1.0;
    return c;
}

Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("frobenius_inner shape mismatch");
    Complex s(0.0, 0.0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += std::conj(a(i, j)) * b(i, j);
    return s;
}

ComplexMatrix random_unitary(int n, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    EigenCMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<EigenCMat> qr(g);
    EigenCMat q = qr.householderQ() * EigenCMat::Identity(n, n);
    EigenCMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the diagonal phases so the distribution is Haar.
    for (int j = 0; j < n; ++j) {
        Complex d = r(j, j);
        Complex phase = std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0, 0.0);
        for (int i = 0; i < n; ++i) q(i, j) *= phase;
    }
    return from_eigen(q);
}

std::string to_string(const ComplexMatrix& a) {
    std::ostringstream os;
    os << a.rows() << "x" << a.cols() << " [";
    for (int i = 0; i < a.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < a.cols(); ++j) {
            if (j) os << ", ";
            os << a(i, j).real();
            if (a(i, j).imag() != 0.0) os << (a(i, j).imag() > 0 ? "+" : "") << a(i, j).imag() << "i";
        }
    }
    os << "]";
    return os.str();
}

}  // namespace twohilb
