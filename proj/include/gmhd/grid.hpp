#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmhd {

using Vec3 = std::array<double, 3>;
using IVec3 = std::array<long long, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double dot(const IVec3& a, const Vec3& b) {
    return double(a[0]) * b[0] + double(a[1]) * b[1] + double(a[2]) * b[2];
}

inline long long dot(const IVec3& a, const IVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline double norm2(const IVec3& a) { return double(dot(a, a)); }
inline double norm(const IVec3& a) { return std::sqrt(norm2(a)); }

inline IVec3 operator+(const IVec3& a, const IVec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline IVec3 operator-(const IVec3& a, const IVec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline bool operator==(const IVec3& a, const IVec3& b) {
    return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

/// Periodic grid on [0,2pi)^3. A slab grid has n2 == 1 and carries fields
/// constant in x2; all other axes must be even and >= 4.
struct Grid {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;

    Grid() = default;
    Grid(int n1_, int n2_, int n3_) : n1(n1_), n2(n2_), n3(n3_) { validate(); }

    static Grid slab(int n1_, int n3_) { return Grid(n1_, 1, n3_); }
    static Grid full(int n1_, int n2_, int n3_) { return Grid(n1_, n2_, n3_); }

    bool slab_mode() const { return n2 == 1; }

    int n(int axis) const { return axis == 0 ? n1 : (axis == 1 ? n2 : n3); }

    std::size_t size() const {
        return std::size_t(n1) * std::size_t(n2) * std::size_t(n3);
    }

    // Largest representable wavenumber; the +/-n/2 Nyquist mode is dropped so
    // every retained mode has a conjugate partner.
    int max_mode(int axis) const {
        int m = n(axis);
        return m == 1 ? 0 : m / 2 - 1;
    }

    // 2/3-rule cutoff applied to every spectral field.
    int cutoff(int axis) const {
        int m = n(axis);
        return m == 1 ? 0 : m / 3;
    }

    std::size_t at(int i1, int i2, int i3) const {
        return (std::size_t(i1) * n2 + i2) * n3 + i3;
    }

    static int mode_of(int idx, int n) { return 2 * idx < n ? idx : idx - n; }
    static int index_of(int mode, int n) { return mode >= 0 ? mode : mode + n; }

    bool contains_mode(const IVec3& m) const {
        return std::abs(m[0]) <= cutoff(0) && std::abs(m[1]) <= cutoff(1) &&
               std::abs(m[2]) <= cutoff(2);
    }

    Vec3 point(int i1, int i2, int i3) const {
        const double two_pi = 2.0 * M_PI;
        return {two_pi * i1 / n1, two_pi * i2 / n2, two_pi * i3 / n3};
    }

    bool operator==(const Grid& o) const {
        return n1 == o.n1 && n2 == o.n2 && n3 == o.n3;
    }

private:
    void validate() const {
        auto ok = [](int m) { return m >= 4 && m % 2 == 0; };
        if (!ok(n1) || !ok(n3))
            throw std::invalid_argument("Grid: n1 and n3 must be even and >= 4");
        if (n2 != 1 && !ok(n2))
            throw std::invalid_argument("Grid: n2 must be 1 (slab) or even and >= 4");
    }
};

}  // namespace gmhd
