#include "k3lcs/mat2.hpp"

namespace k3lcs {

Mat2 Mat2::inverse() const {
    const std::int64_t dt = det();
    if (dt != 1 && dt != -1) {
        throw Error(ErrorKind::Precondition, "det=+-1", "2x2 matrix is not invertible over Z");
    }
    return {d * dt, -b * dt, -c * dt, a * dt};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

GaussianRational mobius(const Mat2& m, const GaussianRational& tau) {
    return (GaussianRational(m.a) * tau + GaussianRational(m.b)) / (GaussianRational(m.c) * tau + GaussianRational(m.d));
}

}  // namespace k3lcs
