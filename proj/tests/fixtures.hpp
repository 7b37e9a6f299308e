#pragma once

// Reference data for q = 2, m = 2. Tuples are transcribed from the e_ij
// notation (e_ij has a single 1 in row i, column j; J is all ones).

#include <string>
#include <vector>

namespace fixtures {

inline const std::vector<std::string> kPrimitiveDeg4{"x^4+x+1", "x^4+x^3+1"};

inline const std::vector<std::string> kPrimitiveDeg6{
    "x^6+x^5+x^4+x+1", "x^6+x+1", "x^6+x^5+x^3+x^2+1", "x^6+x^5+1", "x^6+x^4+x^3+x+1", "x^6+x^5+x^2+x+1"};

// (C_0, C_1) pairs with characteristic polynomial x^4+x+1
inline const std::vector<std::string> kFiberX4X1{
    "C0=1,1;0,1;C1=0,0;1,0",  // (J - e21, e21)
    "C0=1,1;0,1;C1=1,1;1,1",  // (J - e21, J)
    "C0=0,1;1,0;C1=0,0;1,0",  // (e12 + e21, e21)
    "C0=0,1;1,0;C1=0,1;0,0",  // (e12 + e21, e12)
    "C0=0,1;1,1;C1=1,0;0,1",  // (J - e11, I)
    "C0=1,1;1,0;C1=1,0;0,1",  // (J - e22, I)
    "C0=1,0;1,1;C1=0,1;0,0",  // (J - e12, e12)
    "C0=1,0;1,1;C1=1,1;1,1",  // (J - e12, J)
};

// (C_0, C_1) pairs with characteristic polynomial x^4+x^3+1
inline const std::vector<std::string> kFiberX4X3X1{
    "C0=1,1;0,1;C1=0,0;1,1",  // (J - e21, e21 + e22)
    "C0=1,1;0,1;C1=1,0;1,0",  // (J - e21, e11 + e21)
    "C0=0,1;1,0;C1=0,0;0,1",  // (e12 + e21, e22)
    "C0=0,1;1,0;C1=1,0;0,0",  // (e12 + e21, e11)
    "C0=0,1;1,1;C1=0,1;1,1",  // (J - e11, J - e11)
    "C0=1,1;1,0;C1=1,1;1,0",  // (J - e22, J - e22)
    "C0=1,0;1,1;C1=0,1;0,1",  // (J - e12, e12 + e22)
    "C0=1,0;1,1;C1=1,1;0,0",  // (J - e12, e11 + e12)
};

}  // namespace fixtures
