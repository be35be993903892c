#include "polyexp/numeric.hpp"

namespace polyexp {

std::string to_string(Method m) {
    switch (m) {
        case Method::Taylor: return "Taylor";
        case Method::Asymptotic: return "Asymptotic";
        case Method::Relation: return "Relation";
        case Method::Quadrature: return "Quadrature";
        case Method::FiniteDifference: return "FiniteDifference";
    }
    return "unknown";
}

Complex plog(Complex z) {
    if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
    return std::log(z);
}

MpComplex plog(const MpComplex& z) {
    MpReal re = z.real();
    MpReal im = z.imag();
    if (im == 0) im = 0;  // drops a negative zero
    using boost::multiprecision::atan2;
    using boost::multiprecision::log;
    using boost::multiprecision::sqrt;
    return MpComplex(log(sqrt(re * re + im * im)), atan2(im, re));
}

MpReal to_mp(const Rational& q) {
    return MpReal(q.get_num().get_str()) / MpReal(q.get_den().get_str());
}

MpComplex to_mp(Complex z) { return MpComplex(MpReal(z.real()), MpReal(z.imag())); }

Complex to_complex(const MpComplex& z) {
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

}  // namespace polyexp
