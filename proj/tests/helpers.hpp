#pragma once

#include <initializer_list>
#include <vector>

#include "bures/matrix.hpp"

namespace test {

inline bures::Matrix mat2(double a, double b, double c, double d) {
    bures::Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline bures::Matrix diag(std::initializer_list<double> values) {
    const int n = static_cast<int>(values.size());
    bures::Matrix m = bures::Matrix::Zero(n, n);
    int i = 0;
    for (double v : values) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

inline bures::SPDMatrix spd_diag(std::initializer_list<double> values) {
    return bures::SPDMatrix(diag(values));
}

inline double frob(const bures::Matrix& m) { return m.norm(); }

}  // namespace test
