use std::sync::Arc;

use crcore::{CRAlgebra, CrModel};
use fibration::{
    classify_map, deployment_verify, homotopic_characteristic_matrix, homotopic_characteristic_regular, lift,
    maximal_par, minimal_par, par_membership, z_root_decomposition, HomotopicCharacteristic, MapClassification,
};
use matrixlie::Subalg;
use realforms::{type_criteria, MinimalOrbit, RealForm, Witness};
use regularize::{regularize_matrix, regularize_regular, Certificate, RegularizationChain};
use rootsys::{format_set, ParabolicRootSet, RegularSubalgebra, RootSet, RootSystem};
use serde_json::{json, Map, Value};

use crate::context::Context;
use crate::problem::Target;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Analyze,
    Regularize,
    ParMax,
    ParMin,
    Fibration,
    Lift,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Regularize => "regularize",
            Command::ParMax => "par-max",
            Command::ParMin => "par-min",
            Command::Fibration => "fibration",
            Command::Lift => "lift",
        }
    }
}

pub fn execute(cmd: Command, ctx: &Context) -> Result<Value, CliError> {
    match cmd {
        Command::Analyze => analyze(ctx),
        Command::Regularize => regularize(ctx),
        Command::ParMax => par_max(ctx),
        Command::ParMin => par_min(ctx),
        Command::Fibration => fibration(ctx),
        Command::Lift => lift_cmd(ctx),
    }
}

fn roots(set: &RootSet) -> Value {
    json!(format_set(set))
}

fn parabolic(sys: &RootSystem, q: &ParabolicRootSet) -> Value {
    json!({
        "qn": roots(q.qn()),
        "qr": roots(q.qr()),
        "crosses": q.crosses(sys),
        "borel": q.is_borel(),
    })
}

fn certificate(c: &Certificate) -> Value {
    json!({
        "passed": c.passed(),
        "self_normalizing": c.self_normalizing,
        "q_plus_conj_is_k": c.q_plus_conj_is_k,
        "triple_decomposition": c.triple_decomposition,
    })
}

fn flags<S>(c: &MapClassification<S>) -> Value {
    Value::Object(c.flags().iter().map(|(k, b)| (k.to_string(), Value::Bool(*b))).collect())
}

fn regular_roots(v: &RegularSubalgebra) -> Value {
    json!({
        "v": roots(v.roots()),
        "nr": roots(&v.nilpotent_roots()),
        "levi": roots(&v.reductive_roots()),
        "toral_dim": v.toral().dim(),
    })
}

fn structure<M: CrModel>(cr: &CRAlgebra<M>) -> Result<Map<String, Value>, CliError> {
    let model = cr.model();
    let nred = cr.is_n_reductive()?;
    let (cr_dim, cr_codim) = cr.cr_dims();
    let regularity = if nred.holds { json!(cr.regularity_type()?.to_string()) } else { Value::Null };
    let mut m = Map::new();
    m.insert(
        "dims".into(),
        json!({"k": model.ambient_dim(), "v": cr.dim(), "nr": model.dim(&nred.nr), "levi": model.dim(&nred.levi)}),
    );
    m.insert("cr_dim".into(), json!(cr_dim));
    m.insert("cr_codim".into(), json!(cr_codim));
    m.insert("manifold_dim".into(), json!(cr.manifold_dim()));
    m.insert("n_reductive".into(), json!(nred.holds));
    m.insert("totally_real".into(), json!(cr.is_totally_real()));
    m.insert("totally_complex".into(), json!(cr.is_totally_complex()));
    m.insert("regularity_type".into(), regularity);
    Ok(m)
}

fn witness(w: &Option<Witness>) -> Value {
    match w {
        Some(w) => json!({"alpha": w.alpha.to_string(), "beta": w.beta.to_string(), "sum": w.sum.to_string()}),
        None => Value::Null,
    }
}

fn orbit_report(form: &RealForm, orbit: &MinimalOrbit, regularity: Option<&str>) -> Value {
    let s = &orbit.sets;
    let t = type_criteria(form, s);
    let agrees = regularity.map(|r| match r {
        "I" => t.agrees_with(crcore::RegularityType::I),
        "II" => t.agrees_with(crcore::RegularityType::II),
        _ => t.agrees_with(crcore::RegularityType::III),
    });
    json!({
        "crosses": s.crosses,
        "sets": {
            "f": roots(&s.f),
            "f_n": roots(&s.f_n),
            "f_r": roots(&s.f_r),
            "f_star": roots(&s.f_star),
            "f_theta": roots(&s.f_theta),
            "f_theta_n": roots(&s.f_theta_n),
            "f_theta_r": roots(&s.f_theta_r),
        },
        "real_roots": roots(&form.classification().real()),
        "type_criteria": {
            "real_in_f": roots(&t.real_in_f),
            "max_sets": t.max_sets.iter().map(roots).collect::<Vec<_>>(),
            "type_i": t.type_i,
            "type_ii": t.type_ii,
            "witness_i": witness(&t.witness_i),
            "witness_ii": witness(&t.witness_ii),
            "agrees_with_rank_test": agrees,
        },
    })
}

fn analyze(ctx: &Context) -> Result<Value, CliError> {
    let mut out = if let (Some(model), Some(v)) = (&ctx.model, &ctx.matrix) {
        let mut m = structure(&CRAlgebra::new(model.clone(), v.clone())?.with_seed(ctx.seed))?;
        m.insert("backend".into(), json!("matrix"));
        m
    } else {
        let (sys, v) = ctx.require_roots("analyze")?;
        let mut m = structure(&CRAlgebra::new(sys.clone(), v.clone())?.with_seed(ctx.seed))?;
        m.insert("backend".into(), json!("roots"));
        m
    };
    out.insert("ambient".into(), json!(ambient_label(ctx)));
    out.insert("roots".into(), ctx.regular.as_ref().map_or(Value::Null, regular_roots));
    let orbit = match (&ctx.form, &ctx.orbit) {
        (Some(form), Some(orbit)) => {
            let reg = out.get("regularity_type").and_then(Value::as_str).map(str::to_string);
            orbit_report(form, orbit, reg.as_deref())
        }
        _ => Value::Null,
    };
    out.insert("minimal_orbit".into(), orbit);
    Ok(Value::Object(out))
}

fn ambient_label(ctx: &Context) -> String {
    match (&ctx.form, &ctx.model, &ctx.sys) {
        (Some(f), _, _) => f.spec().to_string(),
        (None, Some(m), _) => m.label(),
        (None, None, Some(s)) => s.label(),
        _ => String::new(),
    }
}

fn chain<S>(c: &RegularizationChain<S>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("dims".into(), json!(c.dims()));
    m.insert("nr_dims".into(), json!(c.nr_dims()));
    m.insert("stabilized_at".into(), json!(c.stabilized_at));
    m.insert("certificate".into(), certificate(&c.result.certificate));
    m
}

fn regularize(ctx: &Context) -> Result<Value, CliError> {
    if let (Some(model), Some(v)) = (&ctx.model, &ctx.matrix) {
        let c = regularize_matrix(model, v)?;
        let mut m = chain(&c);
        let q = &c.result.q;
        let root_form = match (&ctx.form, &ctx.sys) {
            (Some(form), Some(sys)) => form
                .regular_of(q)
                .and_then(|r| ParabolicRootSet::new(sys, r.roots().clone()).ok())
                .map_or(Value::Null, |p| parabolic(sys, &p)),
            _ => Value::Null,
        };
        m.insert("backend".into(), json!("matrix"));
        m.insert("q".into(), json!({"dim": q.dim(), "parabolic": root_form}));
        return Ok(Value::Object(m));
    }
    let (sys, v) = ctx.require_roots("regularize")?;
    let (c, q) = regularize_regular(sys, v)?;
    let mut m = chain(&c);
    m.insert("backend".into(), json!("roots"));
    m.insert("q".into(), json!({"dim": c.result.q.dim(), "parabolic": parabolic(sys, &q)}));
    Ok(Value::Object(m))
}

fn z_roots(sys: &RootSystem, q: &ParabolicRootSet) -> Result<Value, CliError> {
    let z = z_root_decomposition(sys, q)?;
    z.verify(sys, q)?;
    let comps: Vec<Value> =
        z.positive().map(|c| json!({"label": c.label, "roots": roots(&c.roots), "dim": c.roots.len()})).collect();
    Ok(json!({"center_dim": z.center.dim(), "positive": comps, "simple_count": z.simple_zroots.len()}))
}

fn containing(ctx: &Context, sys: &RootSystem) -> Result<Option<RegularSubalgebra>, CliError> {
    let Some(t) = &ctx.problem.options.containing else {
        return Ok(None);
    };
    Ok(Some(match t {
        Target::Roots(r) => RegularSubalgebra::new(sys, exactlin::Subspace::zero(sys.dim()), sys.parse_set(r)?)?,
        other => ctx.regular_target(other)?.subalgebra(sys),
    }))
}

fn par_max(ctx: &Context) -> Result<Value, CliError> {
    let (sys, v) = ctx.require_roots("par-max")?;
    let w = containing(ctx, sys)?;
    let max = maximal_par(sys, v, w.as_ref(), ctx.rank_cap)?;
    let list = max
        .iter()
        .map(|q| {
            let mut p = parabolic(sys, q);
            p["z_roots"] = z_roots(sys, q)?;
            Ok(p)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(json!({"count": list.len(), "parabolics": list}))
}

fn par_min(ctx: &Context) -> Result<Value, CliError> {
    let (sys, v) = ctx.require_roots("par-min")?;
    let min = minimal_par(sys, v, ctx.rank_cap)?;
    let list: Vec<Value> = min.iter().map(|q| parabolic(sys, q)).collect();
    Ok(json!({"count": list.len(), "parabolics": list, "nr_in_nr_q": true, "levis_conjugate": true}))
}

fn target(ctx: &Context) -> Target {
    ctx.problem.options.target.clone().unwrap_or(Target::Regularization)
}

fn homotopic(h: &HomotopicCharacteristic) -> Value {
    json!({
        "rank_s": h.rank_s,
        "torus_meet_s": h.torus_meet_s,
        "c_q": h.c_q,
        "cartan_part_in_torus": h.cartan_part_in_torus,
        "cartan_is_torus_plus_center": h.cartan_is_torus_plus_center,
    })
}

fn fibration(ctx: &Context) -> Result<Value, CliError> {
    let t = target(ctx);
    let mut out = Map::new();
    if let (Some(model), Some(v)) = (&ctx.model, &ctx.matrix) {
        let q = ctx.matrix_target(&t)?;
        out.insert("backend".into(), json!("matrix"));
        out.insert("target_dim".into(), json!(q.dim()));
        out.insert("in_par".into(), json!(par_membership(model.as_ref(), v, &q)?));
        out.insert("classification".into(), flags(&classify_map(model.as_ref(), v, &q)));
        let levi = v.meet(&v.sigma());
        out.insert(
            "homotopic_characteristic".into(),
            homotopic(&homotopic_characteristic_matrix(&levi, &q, ctx.seed)?),
        );
    } else {
        let (sys, v) = ctx.require_roots("fibration")?;
        let q = ctx.regular_target(&t)?;
        let qs = q.subalgebra(sys);
        out.insert("backend".into(), json!("roots"));
        out.insert("target_dim".into(), json!(qs.dim()));
        out.insert("in_par".into(), json!(par_membership(sys.as_ref(), v, &qs)?));
        out.insert("classification".into(), flags(&classify_map(sys.as_ref(), v, &qs)));
        out.insert(
            "homotopic_characteristic".into(),
            homotopic(&homotopic_characteristic_regular(sys, &v.real_part(), &q)?),
        );
    }
    if let Some((sys, v)) = ctx.root_backend() {
        let q = ctx.regular_target(&t)?;
        out.insert("target".into(), parabolic(sys, &q));
        out.insert("z_roots".into(), z_roots(sys, &q)?);
        let maximal = maximal_par(sys, v, None, ctx.rank_cap)?.contains(&q);
        out.insert("maximal_in_par".into(), json!(maximal));
        let n_reductive = CRAlgebra::new(sys.clone(), v.clone())?.is_n_reductive()?.holds;
        let deployment = if maximal && n_reductive {
            let d = deployment_verify(sys, v, &q)?;
            json!({
                "generated_as_algebra": true,
                "generated_as_module": d.generated_as_module,
                "module_closure_dim": d.module_closure.dim(),
                "is_deployment": d.classification.is_deployment,
            })
        } else {
            Value::Null
        };
        out.insert("deployment".into(), deployment);
    }
    Ok(Value::Object(out))
}

fn lift_report<M: CrModel>(
    model: &Arc<M>,
    v: &M::Space,
    q: &M::Space,
    seed: u64,
) -> Result<(Map<String, Value>, M::Space), CliError> {
    let l = lift(model.as_ref(), v, q)?;
    let cr = CRAlgebra::new(model.clone(), l.v_q.clone())?.with_seed(seed);
    let (cr_dim, cr_codim) = cr.cr_dims();
    let mut m = Map::new();
    m.insert(
        "dims".into(),
        json!({"v": model.dim(v), "v_q": model.dim(&l.v_q), "nr": model.dim(&l.nr), "levi": model.dim(&l.levi)}),
    );
    m.insert("cr_dim".into(), json!(cr_dim));
    m.insert("cr_codim".into(), json!(cr_codim));
    m.insert("n_reductive".into(), json!(l.n_reductive));
    m.insert("strengthens".into(), json!(l.strengthens));
    m.insert("classification".into(), flags(&classify_map(model.as_ref(), &l.v_q, q)));
    Ok((m, l.v_q))
}

fn lift_cmd(ctx: &Context) -> Result<Value, CliError> {
    let t = target(ctx);
    if let (Some(model), Some(v)) = (&ctx.model, &ctx.matrix) {
        let q: Subalg = ctx.matrix_target(&t)?;
        let (mut m, v_q) = lift_report(model, v, &q, ctx.seed)?;
        let r = match (&ctx.form, &ctx.sys) {
            (Some(form), Some(_)) => form.regular_of(&v_q).map_or(Value::Null, |r| regular_roots(&r)),
            _ => Value::Null,
        };
        m.insert("backend".into(), json!("matrix"));
        m.insert("roots".into(), r);
        return Ok(Value::Object(m));
    }
    let (sys, v) = ctx.require_roots("lift")?;
    let q = ctx.regular_target(&t)?;
    let (mut m, v_q) = lift_report(sys, v, &q.subalgebra(sys), ctx.seed)?;
    m.insert("backend".into(), json!("roots"));
    m.insert("roots".into(), regular_roots(&v_q));
    Ok(Value::Object(m))
}
