#include "mubcube/fixtures.hpp"

#include <cmath>

namespace mubcube::fixtures {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix f2() {
    Matrix m(2, 2);
    m << 1, 1, 1, -1;
    return m;
}

Matrix t2() {
    Matrix m(2, 2);
    m << Complex(1, 0), Complex(1, 0), Complex(0, 1), Complex(0, -1);
    return m;
}

Matrix f3() {
    const Complex w = kOmega, w2 = kOmega * kOmega;
    Matrix m(3, 3);
    m << 1, 1, 1, 1, w, w2, 1, w2, w;
    return m;
}

Matrix t3() {
    Vector d(3);
    d << Complex(1, 0), kOmega, kOmega;
    return d.asDiagonal() * f3();
}

}  // namespace

MubSystem standard_triplet_d2() {
    const double s = 1.0 / std::sqrt(2.0);
    return validate_mub({Matrix::Identity(2, 2), s * f2(), s * t2()}, 1e-9);
}

MubSystem standard_triplet_d3() {
    const double s = 1.0 / std::sqrt(3.0);
    return validate_mub({Matrix::Identity(3, 3), s * f3(), s * t3()}, 1e-9);
}

MubSystem tensor_triplet_d6() {
    const double s = 1.0 / std::sqrt(6.0);
    return validate_mub(
        {Matrix::Identity(6, 6), s * kron(f2(), f3()), s * kron(t2(), t3())}, 1e-9);
}

std::pair<Matrix, Matrix> zauner_pair_reference() {
    const Matrix f11 = fourier(FourierParams{}).m;
    Vector d(6);
    d << Complex(1, 0), kOmega, kOmega, Complex(0, 1), Complex(0, 1) * kOmega,
        Complex(0, 1) * kOmega;
    return {f11, Matrix(d.asDiagonal() * f11)};
}

Matrix szollosi_instance() {
    const auto s = szollosi_equivalent(fourier_transposed(FourierParams(kOmega, kOmega)), 1e-9);
    if (!s) throw Error("szollosi_instance: pattern extraction failed");
    return *s;
}

}  // namespace mubcube::fixtures
