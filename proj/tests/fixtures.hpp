#pragma once

#include <string>
#include <vector>

namespace fixtures {

// Horn system on C^3 with ti = xi*di (theta sugar).
inline const std::vector<std::string> kHorn = {
    "(t1+2*t2+t3+2)*t1 - x1*(t1+2*t2)*t1",
    "(t1+2*t2+t3+2)*(t1+2*t2+t3+1)*t2 + x2*(t1+2*t2)*(t1+2*t2+1)*t2",
    "(t1+2*t2+t3+2) + x3*t3",
};

}  // namespace fixtures
