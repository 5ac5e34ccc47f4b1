//! Linear RGB radiance values.

use serde::{Deserialize, Serialize};
use std::ops::{Add, AddAssign, Div, Mul, Sub};

/// Linear radiance (or intensity) triple. Components are relative
/// watts-per-steradian-per-square-meter scale; only ratios matter to the
/// sampling distributions.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Spectrum {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

impl Spectrum {
    pub const ZERO: Spectrum = Spectrum {
        r: 0.0,
        g: 0.0,
        b: 0.0,
    };

    pub const fn new(r: f64, g: f64, b: f64) -> Self {
        Spectrum { r, g, b }
    }

    pub const fn splat(v: f64) -> Self {
        Spectrum { r: v, g: v, b: v }
    }

    /// Rec. 709 luminance; the scalar reduction used wherever the
    /// training loop needs a single weight out of an RGB value.
    pub fn luminance(self) -> f64 {
        0.2126 * self.r + 0.7152 * self.g + 0.0722 * self.b
    }

    pub fn is_finite(self) -> bool {
        self.r.is_finite() && self.g.is_finite() && self.b.is_finite()
    }

    pub fn is_non_negative(self) -> bool {
        self.r >= 0.0 && self.g >= 0.0 && self.b >= 0.0
    }

    pub fn is_black(self) -> bool {
        self.r == 0.0 && self.g == 0.0 && self.b == 0.0
    }

    pub fn max_component(self) -> f64 {
        self.r.max(self.g).max(self.b)
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.r, self.g, self.b]
    }
}

impl From<[f64; 3]> for Spectrum {
    fn from(a: [f64; 3]) -> Self {
        Spectrum::new(a[0], a[1], a[2])
    }
}

impl Add for Spectrum {
    type Output = Spectrum;
    fn add(self, o: Spectrum) -> Spectrum {
        Spectrum::new(self.r + o.r, self.g + o.g, self.b + o.b)
    }
}

impl AddAssign for Spectrum {
    fn add_assign(&mut self, o: Spectrum) {
        *self = *self + o;
    }
}

impl Sub for Spectrum {
    type Output = Spectrum;
    fn sub(self, o: Spectrum) -> Spectrum {
        Spectrum::new(self.r - o.r, self.g - o.g, self.b - o.b)
    }
}

impl Mul<f64> for Spectrum {
    type Output = Spectrum;
    fn mul(self, s: f64) -> Spectrum {
        Spectrum::new(self.r * s, self.g * s, self.b * s)
    }
}

impl Mul<Spectrum> for Spectrum {
    type Output = Spectrum;
    fn mul(self, o: Spectrum) -> Spectrum {
        Spectrum::new(self.r * o.r, self.g * o.g, self.b * o.b)
    }
}

impl Div<f64> for Spectrum {
    type Output = Spectrum;
    fn div(self, s: f64) -> Spectrum {
        Spectrum::new(self.r / s, self.g / s, self.b / s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn luminance_weights_sum_to_one() {
        assert!((Spectrum::splat(1.0).luminance() - 1.0).abs() < 1e-12);
    }
}
