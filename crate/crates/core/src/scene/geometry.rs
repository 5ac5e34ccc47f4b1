//! Triangle primitives and ray-triangle intersection.

use crate::math::{Aabb, Ray, Vec3};

/// One triangle with a resolved material and an optional emitter tag.
#[derive(Debug, Clone, Copy)]
pub struct Triangle {
    pub v0: Vec3,
    pub v1: Vec3,
    pub v2: Vec3,
    pub material: u32,
    /// Index into the scene light list when this triangle belongs to an
    /// area light; `u32::MAX` otherwise.
    pub emitter: u32,
}

pub const NOT_EMITTER: u32 = u32::MAX;

impl Triangle {
    pub fn new(v0: Vec3, v1: Vec3, v2: Vec3, material: u32) -> Self {
        Triangle {
            v0,
            v1,
            v2,
            material,
            emitter: NOT_EMITTER,
        }
    }

    pub fn bounds(&self) -> Aabb {
        Aabb::from_points([self.v0, self.v1, self.v2])
    }

    pub fn centroid(&self) -> Vec3 {
        (self.v0 + self.v1 + self.v2) / 3.0
    }

    pub fn area(&self) -> f64 {
        (self.v1 - self.v0).cross(self.v2 - self.v0).length() * 0.5
    }

    /// Geometric normal from the winding order.
    pub fn normal(&self) -> Vec3 {
        (self.v1 - self.v0).cross(self.v2 - self.v0).normalized()
    }

    /// Möller–Trumbore. Returns the hit distance `t` in `(t_min, t_max)`.
    pub fn intersect(&self, ray: &Ray, t_min: f64, t_max: f64) -> Option<f64> {
        let e1 = self.v1 - self.v0;
        let e2 = self.v2 - self.v0;
        let pv = ray.dir.cross(e2);
        let det = e1.dot(pv);
        if det.abs() < 1e-16 {
            return None;
        }
        let inv_det = 1.0 / det;
        let tv = ray.origin - self.v0;
        let u = tv.dot(pv) * inv_det;
        if !(0.0..=1.0).contains(&u) {
            return None;
        }
        let qv = tv.cross(e1);
        let v = ray.dir.dot(qv) * inv_det;
        if v < 0.0 || u + v > 1.0 {
            return None;
        }
        let t = e2.dot(qv) * inv_det;
        if t > t_min && t < t_max {
            Some(t)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::vec3;

    #[test]
    fn hits_front_face() {
        let tri = Triangle::new(
            vec3(-1.0, -1.0, 0.0),
            vec3(1.0, -1.0, 0.0),
            vec3(0.0, 1.0, 0.0),
        0);
        let ray = Ray::new(vec3(0.0, 0.0, -2.0), vec3(0.0, 0.0, 1.0));
        let t = tri.intersect(&ray, 1e-9, f64::INFINITY).unwrap();
        assert!((t - 2.0).abs() < 1e-12);
    }

    #[test]
    fn misses_outside_edges() {
        let tri = Triangle::new(
            vec3(-1.0, -1.0, 0.0),
            vec3(1.0, -1.0, 0.0),
            vec3(0.0, 1.0, 0.0),
        0);
        let ray = Ray::new(vec3(5.0, 5.0, -2.0), vec3(0.0, 0.0, 1.0));
        assert!(tri.intersect(&ray, 1e-9, f64::INFINITY).is_none());
    }

    #[test]
    fn respects_t_range() {
        let tri = Triangle::new(
            vec3(-1.0, -1.0, 0.0),
            vec3(1.0, -1.0, 0.0),
            vec3(0.0, 1.0, 0.0),
        0);
        let ray = Ray::new(vec3(0.0, 0.0, -2.0), vec3(0.0, 0.0, 1.0));
        assert!(tri.intersect(&ray, 1e-9, 1.5).is_none());
    }
}
