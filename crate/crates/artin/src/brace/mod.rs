//! Second group operations: diagram-symmetry assignments on the infinite
//! groups, their verification by sampling, and the finite holomorph side.

mod holomorph;
mod spec;
mod verify;

pub use holomorph::{
    brace_from_function, enumerate_braces, holomorph_roundtrip, regular_subgroup_functions,
    FiniteBrace, FiniteGroup, RetractionSeries, RoundtripReport,
};
pub use spec::{boundary_note, catalog, enumerate_brace_specs, BraceSpec, SpecValidation};
pub use verify::{
    delta_center_check, torus_relation_check, verify_brace_identity, BraceVerification,
    CenterReport, SampleViolation, TorusReport, SAMPLE_HEIGHT,
};
