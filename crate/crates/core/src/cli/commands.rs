use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde_json::json;

use super::spec::{BuiltState, StateSpec};
use super::{CliError, Dist, Format, GridArgs, MarginalArgs, MarginalAxis, UncertaintyArgs};
use crate::closedform::{husimi_lambda, HusimiEvaluator, WignerEvaluator};
use crate::fock::{squeezed_coherent_state, FockAmplitudes, ModelParams, OperatorRep, PhasePoint};
use crate::marginals::{
    broadened_momentum_density, broadened_position_density, husimi_marginal_epsilon, husimi_marginal_gamma,
    WavefunctionEvaluator,
};
use crate::smoothing::QuadSpec;
use crate::squeeze::variance_xy;
use crate::{Result, C64};

pub const GRID_HEADER: &str = "gamma_re,gamma_im,eps_re,eps_im,value";
pub const MARGINAL_HEADER: &str = "fixed_re,fixed_im,direct,broadened,abs_diff";

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> std::result::Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write output: {e}"))),
    }
}

fn normalized_state(spec: &StateSpec, params: &ModelParams, what: &str) -> std::result::Result<FockAmplitudes, CliError> {
    if !spec.is_normalizable() {
        return Err(CliError::Usage(format!("{what} needs a normalizable state, got {spec}")));
    }
    match spec.build(params).map_err(CliError::input)? {
        BuiltState::Normalized(psi) => Ok(psi),
        _ => unreachable!("normalizable specs build Fock states"),
    }
}

#[derive(Clone)]
enum PointEval {
    Husimi(HusimiEvaluator, f64),
    Wigner(WignerEvaluator),
    Lambda(C64, f64),
    Zeta(C64, ModelParams),
}

impl PointEval {
    fn eval(&mut self, p: &PhasePoint) -> Result<f64> {
        match self {
            Self::Husimi(h, kappa) => Ok(h.eval(p, *kappa)),
            Self::Wigner(w) => w.eval(p),
            Self::Lambda(lam, kappa) => Ok(husimi_lambda(*lam, p, *kappa)?.value()),
            Self::Zeta(zeta, params) => {
                let s = squeezed_coherent_state(p, params.kappa, params)?;
                Ok(WavefunctionEvaluator::momentum(&s).eval(*zeta).norm_sqr())
            }
        }
    }
}

pub fn grid(args: &GridArgs, params: &ModelParams, stdout: &mut dyn Write) -> std::result::Result<(), CliError> {
    args.state.check(params).map_err(CliError::input)?;
    if args.dist == Dist::Wigner && !args.state.is_normalizable() {
        return Err(CliError::Usage(format!("no Wigner function for the delta-normalized state {}", args.state)));
    }
    let kappa = params.kappa;
    let proto = match (args.state.build(params).map_err(CliError::input)?, args.dist) {
        (BuiltState::Normalized(psi), Dist::Husimi) => PointEval::Husimi(HusimiEvaluator::new(&psi)?, kappa),
        (BuiltState::Normalized(psi), Dist::Wigner) => PointEval::Wigner(WignerEvaluator::new(&psi)?),
        (BuiltState::Lambda(l), _) => PointEval::Lambda(l, kappa),
        (BuiltState::Zeta(z), _) => PointEval::Zeta(z, *params),
    };
    let points = args.slice.points();
    let values: Vec<Result<f64>> = points
        .par_iter()
        .map_init(|| proto.clone(), |ev, p| ev.eval(p))
        .collect();
    let mut rows = Vec::with_capacity(points.len());
    for (p, v) in points.iter().zip(values) {
        let v = v.map_err(|e| {
            CliError::Numeric(format!(
                "{e} at gamma=({}, {}), eps=({}, {})",
                p.gamma.re, p.gamma.im, p.epsilon.re, p.epsilon.im
            ))
        })?;
        rows.push([p.gamma.re, p.gamma.im, p.epsilon.re, p.epsilon.im, v]);
    }

    let text = match args.format {
        Format::Csv => {
            let mut s = String::with_capacity(rows.len() * 120);
            s.push_str(GRID_HEADER);
            s.push('\n');
            for r in &rows {
                let cells: Vec<String> = r.iter().map(|x| format!("{x:.16e}")).collect();
                s.push_str(&cells.join(","));
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let doc = json!({
                "metadata": {
                    "state": args.state.to_string(),
                    "dist": match args.dist { Dist::Husimi => "husimi", Dist::Wigner => "wigner" },
                    "kappa": kappa,
                    "m_omega": params.m_omega,
                    "cutoff_pi": params.cutoff_pi,
                    "cutoff_k": params.cutoff_k,
                    "version": env!("CARGO_PKG_VERSION"),
                },
                "columns": GRID_HEADER.split(',').collect::<Vec<_>>(),
                "rows": rows,
            });
            let mut s = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Numeric(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    emit(args.out.as_deref(), &text, stdout)
}

pub fn marginal(args: &MarginalArgs, params: &ModelParams, stdout: &mut dyn Write) -> std::result::Result<(), CliError> {
    let psi = normalized_state(&args.state, params, "marginal")?;
    let kappa = params.kappa;
    let mut specs = Vec::with_capacity(args.fixed.len());
    for &z in &args.fixed {
        let d = QuadSpec::marginal_default(kappa, z);
        let q = QuadSpec::new(
            args.half_width.unwrap_or(d.half_width),
            args.points.unwrap_or(d.points_per_axis),
        )
        .map_err(CliError::input)?;
        specs.push((z, q));
    }
    let mut s = String::new();
    s.push_str(MARGINAL_HEADER);
    s.push('\n');
    for (z, q) in specs {
        let (direct, broadened) = match args.axis {
            MarginalAxis::Gamma => (
                husimi_marginal_gamma(&psi, z, kappa, &q)?,
                broadened_position_density(&psi, z, kappa, &q)?,
            ),
            MarginalAxis::Epsilon => (
                husimi_marginal_epsilon(&psi, z, kappa, &q)?,
                broadened_momentum_density(&psi, z, kappa, &q)?,
            ),
        };
        let row = [z.re, z.im, direct, broadened, (direct - broadened).abs()];
        let cells: Vec<String> = row.iter().map(|x| format!("{x:.16e}")).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    emit(args.out.as_deref(), &s, stdout)
}

pub fn uncertainty(args: &UncertaintyArgs, params: &ModelParams, stdout: &mut dyn Write) -> std::result::Result<(), CliError> {
    let psi = normalized_state(&args.state, params, "uncertainty")?;
    let ops = OperatorRep::new(params).map_err(CliError::input)?;
    let v = variance_xy(&psi, &ops)?;
    let text = format!(
        "var_x = {:.16e}\nvar_px = {:.16e}\ndelta_x = {:.16e}\ndelta_px = {:.16e}\nproduct = {:.16e}\n",
        v.var_x,
        v.var_px,
        v.var_x.sqrt(),
        v.var_px.sqrt(),
        v.product
    );
    emit(None, &text, stdout)
}
