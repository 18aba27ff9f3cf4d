//! Fixtures shared by the kernel benchmarks.

use std::sync::Arc;

use tjm_core::depthzero::{DivisionParams, TameRep};
use tjm_core::speh::PSModel;
use tjm_core::{FieldTower, Root};

pub fn tower(p: u32, n: u32, d: u32) -> Arc<FieldTower> {
    Arc::new(FieldTower::new(p, 1, n, d).expect("valid tower"))
}

pub fn tame(p: u32, n: u32, d: u32, e: i64, theta_pi: Root) -> TameRep {
    TameRep::build(&DivisionParams::new(tower(p, n, d), e, theta_pi).expect("regular character")).expect("tame rep")
}

/// The model for τ ⊗ τ with θ(γ) of exponent `e`.
pub fn model(p: u32, n: u32, d: u32, e: i64, theta_pi: Root) -> PSModel {
    let t = tame(p, n, d, e, theta_pi);
    PSModel::build(&t, &t).expect("model")
}
