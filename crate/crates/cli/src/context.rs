use std::sync::Arc;

use crcore::MatrixModel;
use exactlin::Subspace;
use matrixlie::{AmbientAlgebra, Subalg};
use realforms::{build_minimal_orbit, build_real_form, MinimalOrbit, RealForm};
use regularize::{regularize_matrix, regularize_regular};
use rootsys::{ParabolicRootSet, RegularSubalgebra, RootSystem};

use crate::problem::{Ambient, Problem, SubalgebraSource, Target, Toral};
use crate::CliError;

/// A problem with its ambient built and its subalgebra resolved in every
/// backend that can hold it.
pub struct Context {
    pub problem: Problem,
    pub seed: u64,
    pub rank_cap: usize,
    pub form: Option<RealForm>,
    pub orbit: Option<MinimalOrbit>,
    pub sys: Option<Arc<RootSystem>>,
    pub regular: Option<RegularSubalgebra>,
    pub model: Option<Arc<MatrixModel>>,
    pub matrix: Option<Subalg>,
}

impl Context {
    pub fn new(problem: Problem, seed: u64, rank_cap: usize) -> Result<Self, CliError> {
        let mut ctx = Context {
            problem,
            seed,
            rank_cap,
            form: None,
            orbit: None,
            sys: None,
            regular: None,
            model: None,
            matrix: None,
        };
        match ctx.problem.ambient.clone() {
            Ambient::RootSystem { family, rank } => {
                let sys = Arc::new(RootSystem::build(family, rank)?);
                ctx.regular = Some(ctx.regular_from_source(&sys)?);
                ctx.sys = Some(sys);
            }
            Ambient::Matrices { n, basis } => {
                let amb = Arc::new(AmbientAlgebra::new(format!("matrices[{n}]"), n, basis)?);
                let SubalgebraSource::Matrices(ms) = &ctx.problem.subalgebra else {
                    return Err(CliError::Usage("a matrix ambient needs a matrix subalgebra".into()));
                };
                ctx.matrix = Some(Subalg::from_matrices(amb.clone(), ms)?);
                ctx.model = Some(Arc::new(MatrixModel::new(amb)));
            }
            Ambient::RealForm(spec) => {
                let form = build_real_form(spec)?;
                let sys = form.k_roots().map(|d| Arc::new(d.system().clone()));
                let v = match ctx.problem.subalgebra.clone() {
                    SubalgebraSource::MinimalOrbit => {
                        let crosses = ctx.problem.crosses.clone().unwrap_or_default();
                        let orbit = build_minimal_orbit(&form, &crosses)?;
                        let v = orbit.v.clone();
                        ctx.orbit = Some(orbit);
                        v
                    }
                    SubalgebraSource::Pattern(rows) => form.k_subalg(&form.pattern(&rows)?)?,
                    SubalgebraSource::Matrices(ms) => Subalg::from_matrices(form.k().clone(), &ms)?,
                    SubalgebraSource::Roots { .. } => {
                        let sys = sys.as_ref().ok_or_else(|| {
                            CliError::Usage(format!("{}: no root data for k; use a pattern or matrices", form.spec()))
                        })?;
                        let r = ctx.regular_from_source(sys)?;
                        form.embed_regular(&r)?
                    }
                };
                ctx.regular = sys.as_ref().and_then(|_| form.regular_of(&v));
                ctx.sys = sys;
                ctx.model = Some(form.model().clone());
                ctx.matrix = Some(v);
                ctx.form = Some(form);
            }
        }
        Ok(ctx)
    }

    fn regular_from_source(&self, sys: &RootSystem) -> Result<RegularSubalgebra, CliError> {
        let SubalgebraSource::Roots { roots, toral } = &self.problem.subalgebra else {
            return Err(CliError::Usage("a root-system ambient needs a root-set subalgebra".into()));
        };
        let set = sys.parse_set(roots)?;
        let toral = match toral {
            Toral::None => Subspace::zero(sys.dim()),
            Toral::Cartan => sys.cartan().clone(),
            Toral::Span(vs) => {
                if vs.iter().any(|v| v.len() != sys.dim()) {
                    return Err(CliError::Usage(format!("toral vectors need {} coordinates", sys.dim())));
                }
                Subspace::span(sys.dim(), vs.clone())
            }
        };
        let v = RegularSubalgebra::new(sys, toral, set)?;
        if !v.is_subalgebra(sys) {
            return Err(CliError::Usage("the root-set subalgebra is not closed under the bracket".into()));
        }
        Ok(v)
    }

    pub fn root_backend(&self) -> Option<(&Arc<RootSystem>, &RegularSubalgebra)> {
        Some((self.sys.as_ref()?, self.regular.as_ref()?))
    }

    pub fn require_roots(&self, what: &str) -> Result<(&Arc<RootSystem>, &RegularSubalgebra), CliError> {
        self.root_backend()
            .ok_or_else(|| CliError::Usage(format!("{what} needs a subalgebra expressible by roots of k")))
    }

    /// Resolves a parabolic target in the root backend.
    pub fn regular_target(&self, t: &Target) -> Result<ParabolicRootSet, CliError> {
        let (sys, v) = self.require_roots("a root-set target")?;
        Ok(match t {
            Target::Crosses(_) | Target::Roots(_) => named_parabolic(sys, t).expect("crosses or roots")?,
            Target::Regularization => regularize_regular(sys, v)?.1,
            Target::Pattern(_) => {
                let q = self.matrix_target(t)?;
                let form = self.form.as_ref().expect("pattern targets need a real form");
                let r = form.regular_of(&q).ok_or_else(|| CliError::Usage("target pattern is not regular".into()))?;
                ParabolicRootSet::new(sys, r.roots().clone())?
            }
        })
    }

    /// Resolves a parabolic target in the matrix backend.
    pub fn matrix_target(&self, t: &Target) -> Result<Subalg, CliError> {
        let (model, v) = (self.model.as_ref(), self.matrix.as_ref());
        let (Some(model), Some(v)) = (model, v) else {
            return Err(CliError::Usage("matrix target without a matrix ambient".into()));
        };
        match t {
            Target::Regularization => Ok(regularize_matrix(model, v)?.result.q),
            Target::Pattern(rows) => {
                let form = self
                    .form
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("pattern targets need a real_form ambient".into()))?;
                Ok(form.k_subalg(&form.pattern(rows)?)?)
            }
            Target::Crosses(_) | Target::Roots(_) => {
                let form = self.form.as_ref().ok_or_else(|| CliError::Usage("root targets need root data".into()))?;
                let sys =
                    self.sys.as_ref().ok_or_else(|| CliError::Usage("root targets need root data for k".into()))?;
                let q = named_parabolic(sys, t).expect("crosses or roots")?;
                Ok(form.embed_regular(&q.subalgebra(sys))?)
            }
        }
    }
}

fn named_parabolic(sys: &RootSystem, t: &Target) -> Option<Result<ParabolicRootSet, CliError>> {
    match t {
        Target::Crosses(c) => Some(ParabolicRootSet::from_crosses(sys, c).map_err(Into::into)),
        Target::Roots(r) => Some(sys.parse_set(r).and_then(|set| ParabolicRootSet::new(sys, set)).map_err(Into::into)),
        _ => None,
    }
}
