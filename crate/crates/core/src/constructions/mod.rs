//! Named graphs, building-block networks and the families assembled from
//! them.

pub mod blocks;
pub mod families;
pub mod superposition;

pub use blocks::{
    build_p2, build_p3, build_p4e, build_p4v, build_p5ev, build_p5vvv, flower_snark, petersen,
};
pub use superposition::{superpose, SuperpositionPlan};
