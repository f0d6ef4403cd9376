//! Coordinate normalization between the physical two-ring domain and the
//! shared unit space, plus unit-space point sampling.
//!
//! Each ring is described by a centerline radius and a thickness, and is
//! mapped onto a fixed radial band of the unit cylinder: the outer ring onto
//! [0.75, 1.00], the inner ring onto [0.25, 0.50]. The gap band (0.50, 0.75)
//! stays unused; spoke points are rejected rather than extrapolated. Height
//! maps linearly onto [0, 1] and the angular coordinate is preserved.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

/// Unit-space radial band of the outer ring.
pub const OUTER_BAND: (f64, f64) = (0.75, 1.00);
/// Unit-space radial band of the inner ring.
pub const INNER_BAND: (f64, f64) = (0.25, 0.50);

/// Relative slack used for ring-membership tests (scaled by ring thickness).
const MEMBERSHIP_SLACK: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("point is not inside a ring (classified as {region:?})")]
    PointNotInRing { region: Region },
    #[error("unit radius {radius} lies outside both ring bands")]
    UnitRadiusOutOfBand { radius: f64 },
    #[error("unit height {z} lies outside [0, 1]")]
    UnitHeightOutOfRange { z: f64 },
}

/// One concentric ring: physical extent plus the unit-space band it maps to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingSpec {
    /// Centerline radius in mm.
    pub center_radius: f64,
    /// Radial thickness in mm.
    pub thickness: f64,
    /// Lower edge of the unit-space radial band.
    pub band_min: f64,
    /// Upper edge of the unit-space radial band.
    pub band_max: f64,
}

impl RingSpec {
    pub fn new(
        center_radius: f64,
        thickness: f64,
        band_min: f64,
        band_max: f64,
    ) -> Result<Self, GeometryError> {
        let ring = RingSpec {
            center_radius,
            thickness,
            band_min,
            band_max,
        };
        if !(thickness > 0.0) {
            return Err(GeometryError::InvalidRing(format!(
                "thickness must be positive, got {thickness}"
            )));
        }
        if !(band_min > 0.0 && band_min < band_max && band_max <= 1.0) {
            return Err(GeometryError::InvalidRing(format!(
                "band must satisfy 0 < min < max <= 1, got [{band_min}, {band_max}]"
            )));
        }
        if !(ring.inner_radius() > 0.0) {
            return Err(GeometryError::InvalidRing(format!(
                "inner radius c - t/2 = {} must be positive",
                ring.inner_radius()
            )));
        }
        Ok(ring)
    }

    /// Outer ring with the standard [0.75, 1.00] band.
    pub fn outer(center_radius: f64, thickness: f64) -> Result<Self, GeometryError> {
        Self::new(center_radius, thickness, OUTER_BAND.0, OUTER_BAND.1)
    }

    /// Inner ring with the standard [0.25, 0.50] band.
    pub fn inner(center_radius: f64, thickness: f64) -> Result<Self, GeometryError> {
        Self::new(center_radius, thickness, INNER_BAND.0, INNER_BAND.1)
    }

    /// Physical radius of the ring's inner edge (c - t/2).
    pub fn inner_radius(&self) -> f64 {
        self.center_radius - 0.5 * self.thickness
    }

    /// Physical radius of the ring's outer edge (c + t/2).
    pub fn outer_radius(&self) -> f64 {
        self.center_radius + 0.5 * self.thickness
    }

    /// Ring membership with relative slack; ties resolve toward membership.
    fn contains_radius(&self, r: f64) -> bool {
        let slack = MEMBERSHIP_SLACK * self.thickness;
        r >= self.inner_radius() - slack && r <= self.outer_radius() + slack
    }
}

/// Two concentric rings plus the build height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainSpec {
    pub outer: RingSpec,
    pub inner: RingSpec,
    /// Build height in mm; physical z spans [0, height].
    pub height: f64,
}

impl DomainSpec {
    pub fn new(outer: RingSpec, inner: RingSpec, height: f64) -> Result<Self, GeometryError> {
        if !(height > 0.0) {
            return Err(GeometryError::InvalidDomain(format!(
                "height must be positive, got {height}"
            )));
        }
        if inner.outer_radius() >= outer.inner_radius() {
            return Err(GeometryError::InvalidDomain(format!(
                "rings overlap: inner outer edge {} >= outer inner edge {}",
                inner.outer_radius(),
                outer.inner_radius()
            )));
        }
        if inner.band_max > outer.band_min {
            return Err(GeometryError::InvalidDomain(format!(
                "unit bands overlap: [{}, {}] vs [{}, {}]",
                inner.band_min, inner.band_max, outer.band_min, outer.band_max
            )));
        }
        Ok(DomainSpec {
            outer,
            inner,
            height,
        })
    }
}

/// Point in physical coordinates (mm).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Point in the shared unit space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UnitPoint {
    pub fn radius(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl PhysPoint {
    pub fn radius(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

/// Region of the physical domain a point falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Outer,
    Inner,
    Spoke,
    Outside,
}

/// Classify a physical point against the two-ring domain. Total function;
/// points within the membership slack of a ring edge count as in-ring, with
/// the outer ring winning a (degenerate) tie.
pub fn classify_point(p: PhysPoint, d: &DomainSpec) -> Region {
    let z_slack = MEMBERSHIP_SLACK * d.height;
    if p.z < -z_slack || p.z > d.height + z_slack {
        return Region::Outside;
    }
    let r = p.radius();
    if d.outer.contains_radius(r) {
        return Region::Outer;
    }
    if d.inner.contains_radius(r) {
        return Region::Inner;
    }
    if r > d.inner.outer_radius() && r < d.outer.inner_radius() {
        return Region::Spoke;
    }
    Region::Outside
}

/// Map an in-ring physical point to unit space: angle preserved, height
/// scaled to [0, 1], radius remapped onto the ring's band. Values inside the
/// membership slack are snapped onto the band edge.
pub fn normalize_point(p: PhysPoint, d: &DomainSpec) -> Result<UnitPoint, GeometryError> {
    let region = classify_point(p, d);
    let ring = match region {
        Region::Outer => &d.outer,
        Region::Inner => &d.inner,
        _ => return Err(GeometryError::PointNotInRing { region }),
    };
    let r = p.radius();
    let lo = ring.inner_radius();
    let hi = ring.outer_radius();
    let lambda = ((r - lo) / (hi - lo)).clamp(0.0, 1.0);
    let r_u = ring.band_min * (1.0 - lambda) + ring.band_max * lambda;
    let scale = r_u / r;
    Ok(UnitPoint {
        x: p.x * scale,
        y: p.y * scale,
        z: (p.z / d.height).clamp(0.0, 1.0),
    })
}

/// Invert [`normalize_point`]. The unit radius must lie in one of the two
/// bands (tolerance 1e-9) and the height in [0, 1].
pub fn denormalize_point(u: UnitPoint, d: &DomainSpec) -> Result<PhysPoint, GeometryError> {
    const BAND_TOL: f64 = 1e-9;
    if u.z < -BAND_TOL || u.z > 1.0 + BAND_TOL {
        return Err(GeometryError::UnitHeightOutOfRange { z: u.z });
    }
    let r_u = u.radius();
    let ring = if r_u >= d.outer.band_min - BAND_TOL && r_u <= d.outer.band_max + BAND_TOL {
        &d.outer
    } else if r_u >= d.inner.band_min - BAND_TOL && r_u <= d.inner.band_max + BAND_TOL {
        &d.inner
    } else {
        return Err(GeometryError::UnitRadiusOutOfBand { radius: r_u });
    };
    let lambda = ((r_u - ring.band_min) / (ring.band_max - ring.band_min)).clamp(0.0, 1.0);
    let r = ring.inner_radius() * (1.0 - lambda) + ring.outer_radius() * lambda;
    let scale = r / r_u;
    Ok(PhysPoint {
        x: u.x * scale,
        y: u.y * scale,
        z: u.z.clamp(0.0, 1.0) * d.height,
    })
}

/// Draw `n_per_ring` unit-space points per ring, uniform in angle, band
/// radius, and height. Outer-ring points come first. Deterministic per seed.
pub fn sample_unit_points(d: &DomainSpec, n_per_ring: usize, seed: u64) -> Vec<UnitPoint> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(2 * n_per_ring);
    for ring in [&d.outer, &d.inner] {
        for _ in 0..n_per_ring {
            let theta = rng.random::<f64>() * std::f64::consts::TAU;
            let r_u = ring.band_min + rng.random::<f64>() * (ring.band_max - ring.band_min);
            let z = rng.random::<f64>();
            points.push(UnitPoint {
                x: r_u * theta.cos(),
                y: r_u * theta.sin(),
                z,
            });
        }
    }
    points
}
