use std::sync::Arc;

use crcore::{CrModel, MatrixModel};
use matrixlie::Subalg;

use crate::FibrationError;

/// The subspaces compared by [`classify_map`].
#[derive(Clone, Debug, PartialEq)]
pub struct MapWitnesses<S> {
    /// `v ∩ σ(e)`.
    pub v_cap_conj_e: S,
    /// `e ∩ σ(v)`.
    pub e_cap_conj_v: S,
    pub levi_v: S,
    pub levi_e: S,
}

/// Properties of the equivariant map `(k₀, v) → (k₀, e)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MapClassification<S> {
    pub is_cr: bool,
    pub is_submersion: bool,
    pub is_spread: bool,
    pub is_deployment: bool,
    pub fibers_totally_real: bool,
    pub fibers_totally_complex: bool,
    pub witnesses: MapWitnesses<S>,
}

impl<S> MapClassification<S> {
    /// Deployment implies spread and totally real fibers; submersion
    /// implies spread; every property implies CR.
    pub fn lattice_holds(&self) -> bool {
        let others = [
            self.is_submersion,
            self.is_spread,
            self.is_deployment,
            self.fibers_totally_real,
            self.fibers_totally_complex,
        ];
        (!self.is_deployment || (self.is_spread && self.fibers_totally_real))
            && (!self.is_submersion || self.is_spread)
            && (self.is_cr || others.iter().all(|x| !x))
    }

    /// Fixed-key boolean map for reports.
    pub fn flags(&self) -> [(&'static str, bool); 6] {
        [
            ("cr", self.is_cr),
            ("deployment", self.is_deployment),
            ("fibers_totally_complex", self.fibers_totally_complex),
            ("fibers_totally_real", self.fibers_totally_real),
            ("spread", self.is_spread),
            ("submersion", self.is_submersion),
        ]
    }
}

pub fn classify_map<M: CrModel>(model: &M, v: &M::Space, e: &M::Space) -> MapClassification<M::Space> {
    let cv = model.conj(v);
    let ce = model.conj(e);
    let levi_v = model.meet(v, &cv);
    let levi_e = model.meet(e, &ce);
    let v_cap_conj_e = model.meet(v, &ce);
    let e_cap_conj_v = model.meet(e, &cv);
    let is_cr = model.contains(e, v);
    let generated = model.join(v, &levi_e);
    let is_submersion = is_cr && generated == *e;
    let is_spread = is_cr && model.lie(&generated) == *e;
    let fibers_totally_real = is_cr && v_cap_conj_e == e_cap_conj_v && v_cap_conj_e == levi_v;
    let fibers_totally_complex = is_cr && model.join(&v_cap_conj_e, &e_cap_conj_v) == levi_e;
    MapClassification {
        is_cr,
        is_submersion,
        is_spread,
        is_deployment: is_spread && fibers_totally_real,
        fibers_totally_real,
        fibers_totally_complex,
        witnesses: MapWitnesses { v_cap_conj_e, e_cap_conj_v, levi_v, levi_e },
    }
}

/// [`classify_map`] for matrix subalgebras, rejecting different ambients.
pub fn classify_matrix_map(v: &Subalg, e: &Subalg) -> Result<MapClassification<Subalg>, FibrationError> {
    if !Arc::ptr_eq(v.ambient(), e.ambient()) && v.ambient() != e.ambient() {
        return Err(FibrationError::AmbientMismatch);
    }
    let model = MatrixModel::new(v.ambient().clone());
    Ok(classify_map(&model, v, e))
}
