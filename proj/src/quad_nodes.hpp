#pragma once

#include <array>

// Fixed quadrature node tables shared by the special-function and oracle
// translation units. Not installed.

namespace gammaft::detail {

// 20-point Gauss-Legendre rule on [-1, 1], positive half.
inline constexpr std::array<double, 10> kGl20X = {
    0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
    0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
    0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
    0.9931285991850949};
inline constexpr std::array<double, 10> kGl20W = {
    0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
    0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
    0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
    0.0176140071391521};

// Gauss-Kronrod 7-15 pair: Kronrod nodes (positive half, descending),
// Kronrod weights, and the embedded 7-point Gauss weights.
inline constexpr std::array<double, 8> kGk15X = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr std::array<double, 8> kGk15WK = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> kGk15WG = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

}  // namespace gammaft::detail
