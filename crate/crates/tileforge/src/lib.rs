//! Detector-agnostic sliced inference for small-object detection.
//!
//! Large frames get resized down to a detector's input resolution, which
//! shrinks small objects below what the detector can resolve. This crate
//! implements the standard countermeasures end to end: overlapping slice
//! grids, training-set slicing with annotation remapping, fused full-image +
//! per-slice inference with several duplicate-resolution algorithms
//! (NMS, soft-NMS, box merging), a cascaded zoom-in pass that re-detects
//! dense regions at higher effective resolution, and COCO-style evaluation
//! with a small-object breakdown.
//!
//! The detector itself sits behind [`detect::DetectorBackend`]. A
//! configurable oracle backend driven by ground truth makes every pipeline
//! property testable at desk scale without trained weights; real backends
//! attach through a subprocess/file protocol (see [`detect::ExternalDetector`]
//! and the wire formats in [`io`]).
//!
//! A note on conventions: a box is "small" when its area is below
//! 32 x 32 = 1024 px^2 (the usual COCO reading of the 32-pixel rule). Some
//! dataset write-ups state the bound with the opposite inequality; this
//! crate uses strict `area < 1024` everywhere.

pub mod detect;
pub mod eval;
pub mod fusion;
pub mod geometry;
pub mod io;
pub mod seeding;
pub mod slicing;
pub mod synth;
pub mod timing;

pub use detect::{Detection, DetectorBackend, DetectorConfig, OracleDetector, OracleParams};
pub use eval::{EvalParams, EvalReport};
pub use fusion::{CascadeParams, MatchMetric, MergeMethod, MergeParams};
pub use geometry::BBox;
pub use io::{Annotation, ClassTable, SceneRecord};
pub use slicing::{SliceGrid, SliceParams, SliceWindow};
pub use synth::SynthParams;
pub use timing::StageTimings;
