#pragma once

#include <cmath>
#include <stdexcept>

namespace helisurf {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double k) const { return {x * k, y * k, z * k}; }
    Vec3 operator/(double k) const { return {x / k, y / k, z / k}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }

    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }

    double norm() const { return std::sqrt(dot(*this)); }

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double k, const Vec3& v) { return v * k; }

/// Direction vector validated to unit length (1e-12) at construction.
class UnitVec3 {
public:
    explicit UnitVec3(const Vec3& v) : v_(v) {
        if (!v.finite())
            throw std::invalid_argument("UnitVec3: non-finite components");
        if (std::fabs(v.norm() - 1.0) > kUnitTol)
            throw std::invalid_argument("UnitVec3: norm deviates from 1 by more than 1e-12");
    }

    static UnitVec3 normalized(const Vec3& v) {
        if (!v.finite())
            throw std::invalid_argument("UnitVec3: non-finite components");
        const double n = v.norm();
        if (n == 0.0)
            throw std::invalid_argument("UnitVec3: cannot normalize zero vector");
        return UnitVec3(v / n);
    }

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

    static constexpr double kUnitTol = 1e-12;

private:
    Vec3 v_;
};

}  // namespace helisurf
