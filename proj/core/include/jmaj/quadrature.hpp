#pragma once

#include <array>
#include <vector>

namespace jm {

// Fixed Gauss-Legendre rules on [-1, 1]. Hard-coded so integrals are
// bit-reproducible; 32 nodes is the default, 8/16 serve convergence studies.

// n = 8 nodes
inline constexpr std::array<double, 8> kGLNodes8 = {
    0.96028985649753623,
    0.79666647741362674,
    0.52553240991632899,
    0.18343464249564980,
    -0.18343464249564980,
    -0.52553240991632899,
    -0.79666647741362674,
    -0.96028985649753623,
};
inline constexpr std::array<double, 8> kGLWeights8 = {
    0.10122853629037626,
    0.22238103445337447,
    0.31370664587788729,
    0.36268378337836198,
    0.36268378337836198,
    0.31370664587788729,
    0.22238103445337447,
    0.10122853629037626,
};
// n = 16 nodes
inline constexpr std::array<double, 16> kGLNodes16 = {
    0.98940093499164993,
    0.94457502307323258,
    0.86563120238783174,
    0.75540440835500303,
    0.61787624440264375,
    0.45801677765722739,
    0.28160355077925891,
    0.095012509837637440,
    -0.095012509837637440,
    -0.28160355077925891,
    -0.45801677765722739,
    -0.61787624440264375,
    -0.75540440835500303,
    -0.86563120238783174,
    -0.94457502307323258,
    -0.98940093499164993,
};
inline constexpr std::array<double, 16> kGLWeights16 = {
    0.027152459411754095,
    0.062253523938647893,
    0.095158511682492785,
    0.12462897125553387,
    0.14959598881657673,
    0.16915651939500254,
    0.18260341504492359,
    0.18945061045506850,
    0.18945061045506850,
    0.18260341504492359,
    0.16915651939500254,
    0.14959598881657673,
    0.12462897125553387,
    0.095158511682492785,
    0.062253523938647893,
    0.027152459411754095,
};
// n = 32 nodes
inline constexpr std::array<double, 32> kGLNodes32 = {
    0.99726386184948156,
    0.98561151154526834,
    0.96476225558750643,
    0.93490607593773969,
    0.89632115576605212,
    0.84936761373256997,
    0.79448379596794241,
    0.73218211874028968,
    0.66304426693021520,
    0.58771575724076233,
    0.50689990893222939,
    0.42135127613063535,
    0.33186860228212765,
    0.23928736225213707,
    0.14447196158279649,
    0.048307665687738316,
    -0.048307665687738316,
    -0.14447196158279649,
    -0.23928736225213707,
    -0.33186860228212765,
    -0.42135127613063535,
    -0.50689990893222939,
    -0.58771575724076233,
    -0.66304426693021520,
    -0.73218211874028968,
    -0.79448379596794241,
    -0.84936761373256997,
    -0.89632115576605212,
    -0.93490607593773969,
    -0.96476225558750643,
    -0.98561151154526834,
    -0.99726386184948156,
};
inline constexpr std::array<double, 32> kGLWeights32 = {
    0.0070186100094700966,
    0.016274394730905671,
    0.025392065309262059,
    0.034273862913021433,
    0.042835898022226681,
    0.050998059262376176,
    0.058684093478535547,
    0.065822222776361847,
    0.072345794108848506,
    0.078193895787070306,
    0.083311924226946755,
    0.087652093004403811,
    0.091173878695763885,
    0.093844399080804566,
    0.095638720079274859,
    0.096540088514727801,
    0.096540088514727801,
    0.095638720079274859,
    0.093844399080804566,
    0.091173878695763885,
    0.087652093004403811,
    0.083311924226946755,
    0.078193895787070306,
    0.072345794108848506,
    0.065822222776361847,
    0.058684093478535547,
    0.050998059262376176,
    0.042835898022226681,
    0.034273862913021433,
    0.025392065309262059,
    0.016274394730905671,
    0.0070186100094700966,
};

struct QuadNode {
  double t;  // abscissa mapped to [0, 1]
  double w;  // weight on [0, 1]
};

// The n-node rule mapped to [0, 1]; n must be one of 8, 16, 32.
std::vector<QuadNode> gauss_legendre_01(int n);

}  // namespace jm
