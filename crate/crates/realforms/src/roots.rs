use std::collections::BTreeMap;

use rootsys::{Root, RootSet};

use crate::form::{compact_conjugation, Involution, RealForm, RootData};
use crate::RealFormError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootTag {
    Real,
    ImaginaryCompact,
    ImaginaryNoncompact,
    Complex,
}

/// Tags of all roots of `g` together with the induced actions of σ and θ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootClassification {
    tags: BTreeMap<Root, RootTag>,
    sigma_star: BTreeMap<Root, Root>,
    theta_star: BTreeMap<Root, Root>,
}

impl RootClassification {
    pub fn tags(&self) -> &BTreeMap<Root, RootTag> {
        &self.tags
    }

    pub fn tag(&self, r: &Root) -> Option<RootTag> {
        self.tags.get(r).copied()
    }

    /// `ᾱ`.
    pub fn sigma_star(&self, r: &Root) -> Root {
        self.sigma_star[r].clone()
    }

    /// `−ᾱ`.
    pub fn theta_star(&self, r: &Root) -> Root {
        self.theta_star[r].clone()
    }

    pub fn with_tag(&self, tag: RootTag) -> RootSet {
        self.tags.iter().filter(|(_, &t)| t == tag).map(|(r, _)| r.clone()).collect()
    }

    pub fn real(&self) -> RootSet {
        self.with_tag(RootTag::Real)
    }

    pub fn is_noncompact_imaginary(&self, r: &Root) -> bool {
        self.tag(r) == Some(RootTag::ImaginaryNoncompact)
    }

    pub fn theta_image(&self, s: &RootSet) -> RootSet {
        s.iter().map(|r| self.theta_star(r)).collect()
    }
}

/// Reads `σ*` and `θ*` off the action on matrix root vectors and checks
/// that the standard positive system is σ-compatible.
pub(crate) fn classify(data: &RootData, theta: &Involution) -> Result<RootClassification, RealFormError> {
    let sys = data.system();
    let mut tags = BTreeMap::new();
    let mut sigma_star = BTreeMap::new();
    let mut theta_star = BTreeMap::new();
    let image_root = |x: &exactlin::DenseMatrix, what: &str, r: &Root| -> Result<Root, RealFormError> {
        let w = data
            .weight_of(x)
            .filter(|w| sys.is_root(w))
            .ok_or_else(|| RealFormError::Internal(format!("{what} of the root vector of {r} is not a root vector")))?;
        if !data.root_space(&w).expect("root").contains_vector(x.as_flat()) {
            return Err(RealFormError::Internal(format!("{what}(g^{r}) is not the root space g^{w}")));
        }
        Ok(w)
    };
    for r in sys.roots() {
        let e = data.root_vector(r).expect("root");
        let t = theta.apply(&e);
        let s = theta.apply(&compact_conjugation(&e));
        let ts = image_root(&t, "θ", r)?;
        let ss = image_root(&s, "σ", r)?;
        if ts != ss.neg() {
            return Err(RealFormError::Internal(format!("θ* ≠ −σ* on {r}")));
        }
        let tag = if ss == *r {
            RootTag::Real
        } else if ss == r.neg() {
            if t == e {
                RootTag::ImaginaryCompact
            } else if t == e.neg() {
                RootTag::ImaginaryNoncompact
            } else {
                return Err(RealFormError::Internal(format!("θ acts on g^{r} by neither +1 nor −1")));
            }
        } else {
            RootTag::Complex
        };
        tags.insert(r.clone(), tag);
        sigma_star.insert(r.clone(), ss);
        theta_star.insert(r.clone(), ts);
    }
    for (r, tag) in &tags {
        if *tag == RootTag::Complex && sys.is_positive(r) && !sys.is_positive(&sigma_star[r]) {
            return Err(RealFormError::Internal(format!("positive system not σ-compatible at {r}")));
        }
    }
    Ok(RootClassification { tags, sigma_star, theta_star })
}

/// Root classification of a real form with respect to its adapted Cartan.
pub fn classify_roots(form: &RealForm) -> Result<RootClassification, RealFormError> {
    classify(form.g_roots(), form.theta())
}
