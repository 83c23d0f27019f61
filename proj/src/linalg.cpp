#include "contextua/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace contextua {

namespace {

void require_finite(const std::vector<cx>& xs, const char* what) {
    for (const cx& x : xs) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw std::invalid_argument(std::string(what) + ": non-finite component");
        }
    }
}

}  // namespace

CVec::CVec(std::vector<cx> components) : c(std::move(components)) {
    require_finite(c, "CVec");
}

CVec::CVec(std::initializer_list<cx> components) : c(components) {
    require_finite(c, "CVec");
}

double CVec::norm() const {
    double s = 0.0;
    for (const cx& x : c) s += std::norm(x);
    return std::sqrt(s);
}

CMat::CMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, cx{0.0, 0.0}) {}

CMat::CMat(std::size_t r, std::size_t c, std::vector<cx> entries)
    : rows(r), cols(c), e(std::move(entries)) {
    if (e.size() != rows * cols) {
        throw std::invalid_argument("CMat: " + std::to_string(e.size()) + " entries for " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
    require_finite(e, "CMat");
}

CMat::CMat(std::initializer_list<std::initializer_list<cx>> rows_init) {
    rows = rows_init.size();
    cols = rows ? rows_init.begin()->size() : 0;
    e.reserve(rows * cols);
    for (const auto& row : rows_init) {
        if (row.size() != cols) throw std::invalid_argument("CMat: ragged initializer");
        e.insert(e.end(), row.begin(), row.end());
    }
    require_finite(e, "CMat");
}

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CVec tensor(const CVec& u, const CVec& v) {
    CVec out;
    out.c.resize(u.dim() * v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) out.c[i * v.dim() + j] = u[i] * v[j];
    return out;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t ar = 0; ar < a.rows; ++ar)
        for (std::size_t ac = 0; ac < a.cols; ++ac)
            for (std::size_t br = 0; br < b.rows; ++br)
                for (std::size_t bc = 0; bc < b.cols; ++bc)
                    out.at(ar * b.rows + br, ac * b.cols + bc) = a.at(ar, ac) * b.at(br, bc);
    return out;
}

CVec matvec(const CMat& m, const CVec& v) {
    if (m.cols != v.dim()) {
        throw std::invalid_argument("matvec: matrix is " + std::to_string(m.rows) + "x" +
                                    std::to_string(m.cols) + " but vector has dim " +
                                    std::to_string(v.dim()));
    }
    CVec out;
    out.c.assign(m.rows, cx{0.0, 0.0});
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t k = 0; k < m.cols; ++k) out.c[r] += m.at(r, k) * v[k];
    return out;
}

CMat matmul(const CMat& a, const CMat& b) {
    if (a.cols != b.rows) {
        throw std::invalid_argument("matmul: left is " + std::to_string(a.rows) + "x" +
                                    std::to_string(a.cols) + " but right is " +
                                    std::to_string(b.rows) + "x" + std::to_string(b.cols));
    }
    CMat out(a.rows, b.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const cx ark = a.at(r, k);
            for (std::size_t c = 0; c < b.cols; ++c) out.at(r, c) += ark * b.at(k, c);
        }
    return out;
}

CMat adjoint(const CMat& m) {
    CMat out(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out.at(c, r) = std::conj(m.at(r, c));
    return out;
}

cx inner(const CVec& u, const CVec& v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("inner: dims " + std::to_string(u.dim()) + " and " +
                                    std::to_string(v.dim()));
    }
    cx s{0.0, 0.0};
    for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

CMat add(const CMat& a, const CMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw std::invalid_argument("add: shapes " + std::to_string(a.rows) + "x" +
                                    std::to_string(a.cols) + " and " + std::to_string(b.rows) +
                                    "x" + std::to_string(b.cols));
    }
    CMat out = a;
    for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] += b.e[i];
    return out;
}

CMat sub(const CMat& a, const CMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw std::invalid_argument("sub: shapes " + std::to_string(a.rows) + "x" +
                                    std::to_string(a.cols) + " and " + std::to_string(b.rows) +
                                    "x" + std::to_string(b.cols));
    }
    CMat out = a;
    for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] -= b.e[i];
    return out;
}

CMat scale(cx s, const CMat& m) {
    CMat out = m;
    for (cx& x : out.e) x *= s;
    return out;
}

double max_abs(const CMat& m) {
    double mx = 0.0;
    for (const cx& x : m.e) mx = std::max(mx, std::abs(x));
    return mx;
}

double max_abs_diff(const CMat& a, const CMat& b) { return max_abs(sub(a, b)); }

double max_abs_diff(const CVec& u, const CVec& v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("max_abs_diff: dims " + std::to_string(u.dim()) + " and " +
                                    std::to_string(v.dim()));
    }
    double mx = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) mx = std::max(mx, std::abs(u[i] - v[i]));
    return mx;
}

bool is_unitary(const CMat& m, double tol) {
    if (m.rows != m.cols) {
        throw std::invalid_argument("is_unitary: non-square " + std::to_string(m.rows) + "x" +
                                    std::to_string(m.cols));
    }
    return max_abs_diff(matmul(adjoint(m), m), CMat::identity(m.rows)) <= tol;
}

bool is_hermitian(const CMat& m, double tol) {
    if (m.rows != m.cols) return false;
    return max_abs_diff(m, adjoint(m)) <= tol;
}

}  // namespace contextua
