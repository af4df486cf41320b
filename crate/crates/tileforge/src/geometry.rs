//! Axis-aligned box arithmetic and the overlap metrics used by merging and
//! evaluation.
//!
//! Coordinates are continuous (`f64`); sub-pixel boxes arise naturally from
//! slice remapping and resize transforms, and quantizing them would drift
//! through the slice<->global roundtrips. Zero-area boxes are legal inputs to
//! every metric (they return 0); only inverted or non-finite corners are
//! rejected at construction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Area threshold below which a ground-truth box counts as a small object
/// (strictly less than 32 x 32 px).
pub const SMALL_OBJECT_AREA: f64 = 1024.0;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("inverted box: ({x1}, {y1}, {x2}, {y2}) has x2 < x1 or y2 < y1")]
    Inverted { x1: f64, y1: f64, x2: f64, y2: f64 },
    #[error("non-finite box coordinate in ({x1}, {y1}, {x2}, {y2})")]
    NonFinite { x1: f64, y1: f64, x2: f64, y2: f64 },
}

/// Axis-aligned rectangle in pixel coordinates, `(x1, y1)` top-left.
///
/// Invariant: `x1 <= x2` and `y1 <= y2`, all coordinates finite. Serialized
/// as the array `[x1, y1, x2, y2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 4]", try_from = "[f64; 4]")]
pub struct BBox {
    x1: f64,
    y1: f64,
    x2: f64,
    y2: f64,
}

impl BBox {
    pub fn new(x1: f64, y1: f64, x2: f64, y2: f64) -> Result<Self, GeometryError> {
        if !(x1.is_finite() && y1.is_finite() && x2.is_finite() && y2.is_finite()) {
            return Err(GeometryError::NonFinite { x1, y1, x2, y2 });
        }
        if x2 < x1 || y2 < y1 {
            return Err(GeometryError::Inverted { x1, y1, x2, y2 });
        }
        Ok(Self { x1, y1, x2, y2 })
    }

    /// Builds from left/top corner plus extents (the VisDrone and COCO
    /// on-disk convention).
    pub fn from_xywh(x: f64, y: f64, w: f64, h: f64) -> Result<Self, GeometryError> {
        Self::new(x, y, x + w, y + h)
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn y1(&self) -> f64 {
        self.y1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn y2(&self) -> f64 {
        self.y2
    }

    pub fn width(&self) -> f64 {
        self.x2 - self.x1
    }

    pub fn height(&self) -> f64 {
        self.y2 - self.y1
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    /// True iff the box area is strictly below [`SMALL_OBJECT_AREA`].
    pub fn is_small(&self) -> bool {
        self.area() < SMALL_OBJECT_AREA
    }

    /// Overlap rectangle, or `None` when the overlap area is zero (disjoint
    /// or merely edge-touching boxes).
    pub fn intersect(&self, other: &BBox) -> Option<BBox> {
        let x1 = self.x1.max(other.x1);
        let y1 = self.y1.max(other.y1);
        let x2 = self.x2.min(other.x2);
        let y2 = self.y2.min(other.y2);
        if x2 > x1 && y2 > y1 {
            Some(BBox { x1, y1, x2, y2 })
        } else {
            None
        }
    }

    fn intersection_area(&self, other: &BBox) -> f64 {
        self.intersect(other).map_or(0.0, |b| b.area())
    }

    /// Intersection over union. Zero when either the intersection or the
    /// union has zero area.
    pub fn iou(&self, other: &BBox) -> f64 {
        let inter = self.intersection_area(other);
        if inter <= 0.0 {
            return 0.0;
        }
        let union = self.area() + other.area() - inter;
        if union <= 0.0 {
            return 0.0;
        }
        inter / union
    }

    /// Intersection over self: how much of `self` lies inside `reference`.
    /// Asymmetric by design; 1.0 whenever `self` is contained in `reference`.
    pub fn ios(&self, reference: &BBox) -> f64 {
        let own = self.area();
        if own <= 0.0 {
            return 0.0;
        }
        self.intersection_area(reference) / own
    }

    /// Translation; exact for finite offsets, no clipping.
    pub fn translate(&self, dx: f64, dy: f64) -> BBox {
        BBox {
            x1: self.x1 + dx,
            y1: self.y1 + dy,
            x2: self.x2 + dx,
            y2: self.y2 + dy,
        }
    }

    /// Coordinate-wise scaling by positive factors.
    pub fn scale(&self, sx: f64, sy: f64) -> BBox {
        debug_assert!(sx > 0.0 && sy > 0.0);
        BBox {
            x1: self.x1 * sx,
            y1: self.y1 * sy,
            x2: self.x2 * sx,
            y2: self.y2 * sy,
        }
    }

    /// Smallest box containing both operands.
    pub fn enclosing(&self, other: &BBox) -> BBox {
        BBox {
            x1: self.x1.min(other.x1),
            y1: self.y1.min(other.y1),
            x2: self.x2.max(other.x2),
            y2: self.y2.max(other.y2),
        }
    }

    /// Clamps every corner into `[0, w] x [0, h]`. Boxes fully outside
    /// collapse to a zero-area box on the nearest edge.
    pub fn clamp_to(&self, w: f64, h: f64) -> BBox {
        let x1 = self.x1.clamp(0.0, w);
        let y1 = self.y1.clamp(0.0, h);
        let x2 = self.x2.clamp(0.0, w);
        let y2 = self.y2.clamp(0.0, h);
        BBox { x1, y1, x2, y2 }
    }

    /// Grows the box by `margin` on every side (negative margins shrink,
    /// saturating at a degenerate center box).
    pub fn expand(&self, margin_x: f64, margin_y: f64) -> BBox {
        let x1 = self.x1 - margin_x;
        let x2 = self.x2 + margin_x;
        let y1 = self.y1 - margin_y;
        let y2 = self.y2 + margin_y;
        if x2 < x1 || y2 < y1 {
            let cx = (self.x1 + self.x2) / 2.0;
            let cy = (self.y1 + self.y2) / 2.0;
            return BBox {
                x1: cx,
                y1: cy,
                x2: cx,
                y2: cy,
            };
        }
        BBox { x1, y1, x2, y2 }
    }

    /// Minimum edge-to-edge Euclidean distance between two boxes; zero when
    /// they overlap or touch.
    pub fn gap(&self, other: &BBox) -> f64 {
        let dx = (other.x1 - self.x2).max(self.x1 - other.x2).max(0.0);
        let dy = (other.y1 - self.y2).max(self.y1 - other.y2).max(0.0);
        (dx * dx + dy * dy).sqrt()
    }

    pub fn corners(&self) -> [f64; 4] {
        [self.x1, self.y1, self.x2, self.y2]
    }
}

impl From<BBox> for [f64; 4] {
    fn from(b: BBox) -> Self {
        b.corners()
    }
}

impl TryFrom<[f64; 4]> for BBox {
    type Error = GeometryError;

    fn try_from(v: [f64; 4]) -> Result<Self, Self::Error> {
        BBox::new(v[0], v[1], v[2], v[3])
    }
}
