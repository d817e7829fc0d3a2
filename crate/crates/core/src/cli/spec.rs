//! Mini-languages for states and phase-space grids.
//!
//! States are written `kind:v1,v2,...` with complex numbers split into real
//! and imaginary parts:
//!
//! ```text
//! landau:n,m
//! coherent:g_re,g_im,e_re,e_im[,kappa]
//! squeezed:g_re,g_im,e_re,e_im,kappa
//! squeezed-vacuum:mu
//! lambda:re,im
//! zeta:re,im
//! ```
//!
//! Grids are comma-separated `axis=min:max:count` or `axis=value` items over
//! the axes `gamma1`, `gamma2`, `eps1`, `eps2`. Missing axes are fixed at 0.

use std::fmt;
use std::str::FromStr;

use crate::fock::{coherent_state, landau_state, squeezed_coherent_state, FockAmplitudes, ModelParams, PhasePoint};
use crate::squeeze::squeeze_state;
use crate::{Error, Result, C64};

#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    Landau { n: usize, m: usize },
    Coherent { point: PhasePoint, kappa: Option<f64> },
    Squeezed { point: PhasePoint, kappa: f64 },
    SqueezedVacuum { mu: f64 },
    Lambda(C64),
    Zeta(C64),
}

/// A state ready for evaluation.
#[derive(Debug, Clone)]
pub enum BuiltState {
    Normalized(FockAmplitudes),
    Lambda(C64),
    Zeta(C64),
}

fn reals(kind: &str, body: &str, counts: &[usize]) -> std::result::Result<Vec<f64>, String> {
    let vals = body
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("`{t}` is not a finite number in {kind} state"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if !counts.contains(&vals.len()) {
        let want = counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" or ");
        return Err(format!("{kind} state takes {want} values, got {}", vals.len()));
    }
    Ok(vals)
}

fn positive(name: &str, v: f64) -> std::result::Result<f64, String> {
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("{name} must be positive, got {v}"))
    }
}

impl FromStr for StateSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| format!("state `{s}` must look like kind:values"))?;
        match kind {
            "landau" => {
                let idx = body
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a level index")))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                match idx[..] {
                    [n, m] => Ok(Self::Landau { n, m }),
                    _ => Err(format!("landau state takes 2 indices, got {}", idx.len())),
                }
            }
            "coherent" => {
                let v = reals(kind, body, &[4, 5])?;
                let kappa = v.get(4).map(|&k| positive("kappa", k)).transpose()?;
                Ok(Self::Coherent {
                    point: PhasePoint::from_reals(v[0], v[1], v[2], v[3]),
                    kappa,
                })
            }
            "squeezed" => {
                let v = reals(kind, body, &[5])?;
                Ok(Self::Squeezed {
                    point: PhasePoint::from_reals(v[0], v[1], v[2], v[3]),
                    kappa: positive("kappa", v[4])?,
                })
            }
            "squeezed-vacuum" => {
                let v = reals(kind, body, &[1])?;
                Ok(Self::SqueezedVacuum { mu: positive("mu", v[0])? })
            }
            "lambda" => {
                let v = reals(kind, body, &[2])?;
                Ok(Self::Lambda(C64::new(v[0], v[1])))
            }
            "zeta" => {
                let v = reals(kind, body, &[2])?;
                Ok(Self::Zeta(C64::new(v[0], v[1])))
            }
            other => Err(format!(
                "unknown state kind `{other}` (expected landau, coherent, squeezed, squeezed-vacuum, lambda, zeta)"
            )),
        }
    }
}

impl fmt::Display for StateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pt = |p: &PhasePoint| format!("{},{},{},{}", p.gamma.re, p.gamma.im, p.epsilon.re, p.epsilon.im);
        match self {
            Self::Landau { n, m } => write!(f, "landau:{n},{m}"),
            Self::Coherent { point, kappa: None } => write!(f, "coherent:{}", pt(point)),
            Self::Coherent { point, kappa: Some(k) } => write!(f, "coherent:{},{k}", pt(point)),
            Self::Squeezed { point, kappa } => write!(f, "squeezed:{},{kappa}", pt(point)),
            Self::SqueezedVacuum { mu } => write!(f, "squeezed-vacuum:{mu}"),
            Self::Lambda(z) => write!(f, "lambda:{},{}", z.re, z.im),
            Self::Zeta(z) => write!(f, "zeta:{},{}", z.re, z.im),
        }
    }
}

impl StateSpec {
    pub fn is_normalizable(&self) -> bool {
        !matches!(self, Self::Lambda(_) | Self::Zeta(_))
    }

    /// Index and parameter checks that need the model parameters.
    pub fn check(&self, params: &ModelParams) -> Result<()> {
        if let Self::Landau { n, m } = *self {
            if n >= params.cutoff_pi || m >= params.cutoff_k {
                return Err(Error::Bounds {
                    n,
                    m,
                    cutoff_pi: params.cutoff_pi,
                    cutoff_k: params.cutoff_k,
                });
            }
        }
        Ok(())
    }

    /// Coherent states without an explicit width use `params.kappa`.
    pub fn build(&self, params: &ModelParams) -> Result<BuiltState> {
        self.check(params)?;
        Ok(match *self {
            Self::Landau { n, m } => BuiltState::Normalized(landau_state(n, m, params)?),
            Self::Coherent { point, kappa } => {
                BuiltState::Normalized(coherent_state(&point, kappa.unwrap_or(params.kappa), params)?)
            }
            Self::Squeezed { point, kappa } => BuiltState::Normalized(squeezed_coherent_state(&point, kappa, params)?),
            Self::SqueezedVacuum { mu } => {
                BuiltState::Normalized(squeeze_state(&landau_state(0, 0, params)?, mu, params)?)
            }
            Self::Lambda(z) => BuiltState::Lambda(z),
            Self::Zeta(z) => BuiltState::Zeta(z),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AxisSpec {
    Fixed(f64),
    Sweep { min: f64, max: f64, count: usize },
}

impl AxisSpec {
    pub fn values(&self) -> Vec<f64> {
        match *self {
            Self::Fixed(v) => vec![v],
            Self::Sweep { min, max, count } => {
                let h = (max - min) / (count - 1) as f64;
                (0..count)
                    .map(|k| if k + 1 == count { max } else { min + k as f64 * h })
                    .collect()
            }
        }
    }
}

impl FromStr for AxisSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("`{t}` is not a finite number"))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts[..] {
            [v] => Ok(Self::Fixed(num(v)?)),
            [a, b, c] => {
                let (min, max) = (num(a)?, num(b)?);
                let count: usize = c.trim().parse().map_err(|_| format!("`{c}` is not a point count"))?;
                if count < 2 {
                    return Err(format!("swept axis needs at least 2 points, got {count}"));
                }
                if min >= max {
                    return Err(format!("axis range needs min < max, got {min}:{max}"));
                }
                Ok(Self::Sweep { min, max, count })
            }
            _ => Err(format!("axis `{s}` must be a value or min:max:count")),
        }
    }
}

pub const AXIS_NAMES: [&str; 4] = ["gamma1", "gamma2", "eps1", "eps2"];

/// Axes in the order `γ₁, γ₂, ε₁, ε₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub axes: [AxisSpec; 4],
}

impl GridSpec {
    /// Points in row-major order, `γ₁` outermost and `ε₂` innermost.
    pub fn points(&self) -> Vec<PhasePoint> {
        let [a, b, c, d] = self.axes.map(|ax| ax.values());
        let mut out = Vec::with_capacity(a.len() * b.len() * c.len() * d.len());
        for &g1 in &a {
            for &g2 in &b {
                for &e1 in &c {
                    for &e2 in &d {
                        out.push(PhasePoint::from_reals(g1, g2, e1, e2));
                    }
                }
            }
        }
        out
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut axes: [Option<AxisSpec>; 4] = [None; 4];
        for item in s.split(',').filter(|t| !t.trim().is_empty()) {
            let (name, val) = item
                .split_once('=')
                .ok_or_else(|| format!("grid item `{item}` must look like axis=spec"))?;
            let k = AXIS_NAMES
                .iter()
                .position(|a| *a == name.trim())
                .ok_or_else(|| format!("unknown axis `{name}` (expected gamma1, gamma2, eps1, eps2)"))?;
            if axes[k].is_some() {
                return Err(format!("axis `{name}` given twice"));
            }
            axes[k] = Some(val.parse()?);
        }
        Ok(Self {
            axes: axes.map(|a| a.unwrap_or(AxisSpec::Fixed(0.0))),
        })
    }
}

/// A complex number written `re,im`.
pub fn parse_complex(s: &str) -> std::result::Result<C64, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("`{s}` must look like re,im"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("`{t}` is not a finite number"))
    };
    Ok(C64::new(num(a)?, num(b)?))
}
