//! Builders for the two explicit zero-dimensional schemes computed here,
//! the torus-knot deformation system and the stable-map system of a
//! parametrized rational plane curve, plus the weighted Bezout evaluator.

mod binary_form;
mod error;
mod stable_map;
mod torus_knot;

pub use error::ModuliError;
pub use stable_map::{
    build_stable_map_system, choose_marked_data, stable_map_local_length,
    stable_map_local_length_with, validate_stable_map_input, ParamPoint, StableMapProblem,
    StableMapSystem, ValidationCheck, ValidationReport, DEFAULT_MARKED_DATA_SEED,
};
pub use torus_knot::{
    build_torus_knot_system, multiplicity_via_groebner, multiplicity_via_groebner_with,
    torus_knot_ideal, weighted_bezout_length, TorusKnotSystem,
};
