#pragma once

#include "hml/backend.hpp"

namespace hml {
namespace gk {

// Gauss-Kronrod 7/15 pair mapped to [0,1] (x = 2u-1); weights are the
// standard [-1,1] weights, so a panel [a,b] integrates as
// (b-a)/2 * sum w_i f(a + (b-a) u_i).  The 7 Gauss nodes sit at the odd
// indices.  32 digits; the MPFR quadrature path is node-limited to ~106 bits,
// far below every tolerance used on it.
inline constexpr const char* kNodes01[15] = {
    "0.0042723144395936803965726512368355",
    "0.0254460438286207377369051579760745",
    "0.067567788320115463605143605679537",
    "0.129234407200302780068067613359606",
    "0.206956382266154434852927580870635",
    "0.2970774243113014165466967939615195",
    "0.3961075224960507661996552981133775",
    "0.5",
    "0.6038924775039492338003447018866225",
    "0.7029225756886985834533032060384805",
    "0.793043617733845565147072419129365",
    "0.870765592799697219931932386640394",
    "0.932432211679884536394856394320463",
    "0.9745539561713792622630948420239255",
    "0.9957276855604063196034273487631645"};

inline constexpr const char* kWeightK15[15] = {
    "0.022935322010529224963732008058970",
    "0.063092092629978553290700663189204",
    "0.104790010322250183839876322541518",
    "0.140653259715525918745189590510238",
    "0.169004726639267902826583426598550",
    "0.190350578064785409913256402421014",
    "0.204432940075298892414161999234649",
    "0.209482141084727828012999174891714",
    "0.204432940075298892414161999234649",
    "0.190350578064785409913256402421014",
    "0.169004726639267902826583426598550",
    "0.140653259715525918745189590510238",
    "0.104790010322250183839876322541518",
    "0.063092092629978553290700663189204",
    "0.022935322010529224963732008058970"};

inline constexpr const char* kWeightG7[7] = {
    "0.129484966168869693270611432679082",
    "0.279705391489276667901467771423780",
    "0.381830050505118944950369775488975",
    "0.417959183673469387755102040816327",
    "0.381830050505118944950369775488975",
    "0.279705391489276667901467771423780",
    "0.129484966168869693270611432679082"};

template <class R>
struct GkNodes {
  R u[15];
  R wk[15];
  R wg[7];

  static GkNodes make(long wp) {
    using N_ = Num<R>;
    GkNodes n{};
    for (int i = 0; i < 15; ++i) {
      n.u[i] = N_::parse(kNodes01[i], wp);
      n.wk[i] = N_::parse(kWeightK15[i], wp);
    }
    for (int i = 0; i < 7; ++i) n.wg[i] = N_::parse(kWeightG7[i], wp);
    return n;
  }
};

}  // namespace gk
}  // namespace hml
