// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace twohilb {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kNullspaceTol = 1e-10;

/// Dense complex matrix, row-major storage. Zero-dimensional shapes
/// (0 rows and/or 0 columns) are legal values and compose with every
/// operation below.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }
    /// d x 1 standard basis column e_k.
    static ComplexMatrix basis_column(int d, int k);
    /// d x 1 all-ones column.
    static ComplexMatrix ones_column(int d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool same_shape(const ComplexMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    const std::vector<Complex>& data() const { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex c, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tensor product under the row-major pairing (i1,i2) |-> i1*b.rows + i2.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal sum; block k is offset by the row/column totals of all
/// earlier blocks, in list order. Empty list gives the 0x0 matrix.
ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);

/// Vertical / horizontal concatenation.
ComplexMatrix vstack(const std::vector<ComplexMatrix>& blocks);
ComplexMatrix hstack(const std::vector<ComplexMatrix>& blocks);

/// Largest entrywise absolute difference; +infinity on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

bool is_isometry(const ComplexMatrix& a, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix& a, double tol = kDefaultTol);

/// Columns form an orthonormal basis of ker(a), detected by singular values
/// <= tol. Full-rank input yields a matrix with 0 columns. Column phases
/// are normalized so the largest-magnitude entry of each column is real
/// and positive.
ComplexMatrix nullspace_basis(const ComplexMatrix& a, double tol = kNullspaceTol);

/// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& a);

/// The (d1*d2)x(d1*d2) permutation sending |a> (x) |b> to |b> (x) |a>
/// under the kron flattening convention.
ComplexMatrix tensor_swap(int d1, int d2);

/// Frobenius inner product <a, b> = sum conj(a_ij) b_ij.
Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-ish random unitary (QR of a complex Gaussian matrix).
ComplexMatrix random_unitary(int n, std::mt19937& rng);

std::string to_string(const ComplexMatrix& a);

}  // namespace twohilb
