// Dense complex vectors and matrices for the 2- and 4-dimensional
// path/polarization spaces, with tensor products and unitarity checks.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace contextua {

using cx = std::complex<double>;

/// Complex column vector. All components must be finite.
struct CVec {
    std::vector<cx> c;

    CVec() = default;
    explicit CVec(std::vector<cx> components);
    CVec(std::initializer_list<cx> components);

    std::size_t dim() const { return c.size(); }
    const cx& operator[](std::size_t i) const { return c[i]; }
    cx& operator[](std::size_t i) { return c[i]; }

    double norm() const;
};

/// Row-major complex matrix. All entries must be finite.
struct CMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cx> e;

    CMat() = default;
    CMat(std::size_t r, std::size_t c);  // zero-filled
    CMat(std::size_t r, std::size_t c, std::vector<cx> entries);
    CMat(std::initializer_list<std::initializer_list<cx>> rows_init);

    static CMat identity(std::size_t n);

    const cx& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
    cx& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
};

// Kronecker-structured products. Basis ordering is fixed globally as
// path-major: {a(x)V, a(x)H, b(x)V, b(x)H}, i.e. tensor(u, v) puts the
// path factor u first: component (i*dim(v) + j) = u_i * v_j.
CVec tensor(const CVec& u, const CVec& v);
CMat kron(const CMat& a, const CMat& b);

CVec matvec(const CMat& m, const CVec& v);
CMat matmul(const CMat& a, const CMat& b);
CMat adjoint(const CMat& m);

/// Conjugate-linear in the first argument: inner(u, v) = sum conj(u_i) v_i.
cx inner(const CVec& u, const CVec& v);

CMat add(const CMat& a, const CMat& b);
CMat sub(const CMat& a, const CMat& b);
CMat scale(cx s, const CMat& m);

/// Largest entry magnitude; zero for an empty matrix.
double max_abs(const CMat& m);
double max_abs_diff(const CMat& a, const CMat& b);
double max_abs_diff(const CVec& u, const CVec& v);

/// True iff max-abs entry of M^dagger M - I is <= tol. Throws on non-square input.
bool is_unitary(const CMat& m, double tol);

bool is_hermitian(const CMat& m, double tol);

}  // namespace contextua
