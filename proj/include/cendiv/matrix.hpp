#pragma once

#include <vector>

#include "cendiv/poly.hpp"

namespace cendiv {

// Exact dense square matrix over the active field.
class MatrixExact {
public:
    MatrixExact(Field field, int n); // zero matrix; n >= 1

    static MatrixExact identity(const Field& f, int n);
    static MatrixExact from_entries(const Field& f, int n, std::vector<FieldElem> row_major);
    // Companion matrix of a monic polynomial of degree >= 1.
    static MatrixExact companion(const Poly& f);
    static MatrixExact block_diag(const std::vector<MatrixExact>& blocks);

    const Field& field() const { return field_; }
    int dim() const { return n_; }

    const FieldElem& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, FieldElem v) { e_[static_cast<std::size_t>(i) * n_ + j] = std::move(v); }

    MatrixExact operator*(const MatrixExact& o) const;
    MatrixExact operator+(const MatrixExact& o) const;
    MatrixExact operator-(const MatrixExact& o) const;
    bool operator==(const MatrixExact& o) const;
    bool operator!=(const MatrixExact& o) const { return !(*this == o); }

    MatrixExact transpose() const;
    MatrixExact scaled(const FieldElem& c) const;
    bool is_zero() const;

    int rank() const;
    // Inverse via Gauss-Jordan; throws precondition_error if singular.
    MatrixExact inverse() const;

private:
    Field field_;
    int n_;
    std::vector<FieldElem> e_;
};

// n - rank(m), exact.
int nullity(const MatrixExact& m);

// det(xI - m), monic of degree n. Hessenberg reduction (similarity transforms
// with divisions only by nonzero pivots, so any field works), then the
// leading-principal-minor recurrence.
Poly char_poly(const MatrixExact& m);

// f(m) by Horner's scheme.
MatrixExact eval_poly_at_matrix(const Poly& f, const MatrixExact& m);

} // namespace cendiv
