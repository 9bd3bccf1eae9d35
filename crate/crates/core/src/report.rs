//! Comparison reports: the pipeline result next to the closed form for one
//! representation, in a fixed serializable layout.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{
    torus_delta_closed, torus_torsion_closed, twist_delta_closed, twist_torsion_closed,
    TwistDenominators,
};
use crate::laurent::{format_complex, ComplexScalar, RationalFunction};
use crate::representations::{
    build_torus_rep, build_twist_rep, riley_roots, Representation, TorusRepParams, TwistRepParams,
};
use crate::wada::{fox_identity_residual, torsion_limit, twisted_alexander};
use crate::word_calculus::KnotPresentation;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KnotInfo {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    pub abelianization: Vec<i64>,
}

impl KnotInfo {
    fn from_presentation(family: &str, pres: &KnotPresentation) -> Self {
        KnotInfo {
            family: family.to_string(),
            p: None,
            q: None,
            n: None,
            generators: pres.names().to_vec(),
            relators: pres.relators().iter().map(|r| pres.format_word(r)).collect(),
            abelianization: pres.abelianization().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorusRepInfo {
    pub k: i64,
    pub l: i64,
    pub conj_param: ComplexScalar,
    pub bezout: [i64; 2],
    pub meridian_trace: ComplexScalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistRepInfo {
    pub s: ComplexScalar,
    pub root_index: usize,
    pub u: ComplexScalar,
    pub gamma: ComplexScalar,
    pub x_squared: ComplexScalar,
    pub y: ComplexScalar,
    pub denominators: [ComplexScalar; 3],
    pub singular: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationInfo {
    /// 1-based index of the removed generator column.
    pub column: usize,
    pub images: Vec<[[ComplexScalar; 2]; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<TorusRepInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<TwistRepInfo>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitInfo {
    pub sign: i32,
    pub power: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    pub relation: f64,
    pub fox_identity: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub riley: Option<f64>,
    /// Coefficientwise relative error of `delta_closed` against `delta_pipeline`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion_relative: Option<f64>,
    /// Remainder of the synthetic divisions by `t - 1` (relative).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub division_remainder: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The closed form is singular at this representation; nothing compared.
    Singular,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub knot: KnotInfo,
    pub representation: RepresentationInfo,
    pub delta_pipeline: RationalFunction,
    pub delta_closed: Option<RationalFunction>,
    pub unit: Option<UnitInfo>,
    pub torsion: Option<ComplexScalar>,
    pub torsion_closed: Option<ComplexScalar>,
    pub torsion_regular: Option<bool>,
    pub residuals: Residuals,
    pub tol: f64,
    pub status: Status,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub const CSV_HEADER: &'static str = "family,p,q,k,l,n,s,root,u,column,sign,power,delta_error,\
torsion,torsion_closed,torsion_relative,relation,fox_identity,riley,status";

    pub fn csv_row(&self) -> String {
        let opt_i = |x: Option<i64>| x.map(|v| v.to_string()).unwrap_or_default();
        let opt_c = |x: Option<ComplexScalar>| x.map(format_complex).unwrap_or_default();
        let opt_f = |x: Option<f64>| x.map(|v| format!("{v:e}")).unwrap_or_default();
        let torus = self.representation.torus.as_ref();
        let twist = self.representation.twist.as_ref();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Singular => "singular",
        };
        [
            self.knot.family.clone(),
            opt_i(self.knot.p),
            opt_i(self.knot.q),
            opt_i(torus.map(|t| t.k)),
            opt_i(torus.map(|t| t.l)),
            opt_i(self.knot.n),
            opt_c(twist.map(|t| t.s)),
            twist.map(|t| t.root_index.to_string()).unwrap_or_default(),
            opt_c(twist.map(|t| t.u)),
            self.representation.column.to_string(),
            opt_i(self.unit.map(|u| u.sign as i64)),
            opt_i(self.unit.map(|u| u.power)),
            opt_f(self.residuals.delta),
            opt_c(self.torsion),
            opt_c(self.torsion_closed),
            opt_f(self.residuals.torsion_relative),
            format!("{:e}", self.residuals.relation),
            format!("{:e}", self.residuals.fox_identity),
            opt_f(self.residuals.riley),
            status.to_string(),
        ]
        .join(",")
    }
}

/// `|a - b| / |b|`, or `|a - b|` when `b = 0`.
pub fn relative_error(a: ComplexScalar, b: ComplexScalar) -> f64 {
    let d = (a - b).norm();
    if b.norm() > 0.0 {
        d / b.norm()
    } else {
        d
    }
}

struct PipelineResult {
    delta: RationalFunction,
    column: usize,
    torsion: Option<ComplexScalar>,
    regular: Option<bool>,
    remainder: Option<f64>,
    fox_identity: f64,
}

fn run_pipeline(rep: &Representation, column: Option<usize>) -> Result<PipelineResult> {
    let ta = twisted_alexander(rep, column)?;
    let torsion = torsion_limit(&ta.delta).ok();
    Ok(PipelineResult {
        column: ta.column,
        torsion: torsion.map(|t| t.value),
        regular: torsion.map(|t| t.regular),
        remainder: torsion.map(|t| t.remainder),
        delta: ta.delta,
        fox_identity: fox_identity_residual(rep)?,
    })
}

fn images_of(rep: &Representation) -> Vec<[[ComplexScalar; 2]; 2]> {
    rep.images().iter().map(|g| g.0).collect()
}

#[allow(clippy::too_many_arguments)]
fn compare(
    knot: KnotInfo,
    representation: RepresentationInfo,
    pipe: PipelineResult,
    closed: Option<(RationalFunction, ComplexScalar)>,
    relation: f64,
    riley: Option<f64>,
    tol: f64,
) -> Report {
    let mut residuals = Residuals {
        relation,
        fox_identity: pipe.fox_identity,
        riley,
        delta: None,
        torsion_relative: None,
        division_remainder: pipe.remainder,
    };
    let Some((delta_closed, torsion_closed)) = closed else {
        return Report {
            knot,
            representation,
            delta_pipeline: pipe.delta,
            delta_closed: None,
            unit: None,
            torsion: pipe.torsion,
            torsion_closed: None,
            torsion_regular: pipe.regular,
            residuals,
            tol,
            status: Status::Singular,
        };
    };
    let unit = pipe.delta.equal_up_to_unit(&delta_closed, tol);
    residuals.delta = Some(unit.error);
    residuals.torsion_relative = pipe.torsion.map(|t| relative_error(t, torsion_closed));
    let ok = unit.found
        && residuals.torsion_relative.is_some_and(|e| e <= tol)
        && residuals.fox_identity <= tol;
    Report {
        knot,
        representation,
        delta_pipeline: pipe.delta,
        delta_closed: Some(delta_closed),
        unit: unit.found.then_some(UnitInfo { sign: unit.sign, power: unit.power }),
        torsion: pipe.torsion,
        torsion_closed: Some(torsion_closed),
        torsion_regular: pipe.regular,
        residuals,
        tol,
        status: if ok { Status::Pass } else { Status::Fail },
    }
}

/// Pipeline versus closed form for one torus-knot representation.
/// `column` is 0-based; `None` uses the default heuristic.
pub fn torus_report(
    params: &TorusRepParams,
    column: Option<usize>,
    tol: f64,
) -> Result<Report> {
    let rep = build_torus_rep(params)?;
    torus_report_for(params, &rep, column, tol)
}

/// Same as [`torus_report`] for an already built representation of the
/// component described by `params`.
pub fn torus_report_for(
    params: &TorusRepParams,
    rep: &Representation,
    column: Option<usize>,
    tol: f64,
) -> Result<Report> {
    let (p, q, k, l) = (params.p, params.q, params.k, params.l);
    let mut knot = KnotInfo::from_presentation("torus", rep.presentation());
    knot.p = Some(p);
    knot.q = Some(q);
    let pipe = run_pipeline(rep, column)?;
    let closed = torus_delta_closed(p, q, k, l)?;
    let torsion_closed = Complex64::new(torus_torsion_closed(p, q, k, l)?, 0.0);
    let representation = RepresentationInfo {
        column: pipe.column + 1,
        images: images_of(rep),
        torus: Some(TorusRepInfo {
            k,
            l,
            conj_param: params.conj_param,
            bezout: [params.bezout_r, params.bezout_s],
            meridian_trace: rep.holonomy(&params.meridian()).trace(),
        }),
        twist: None,
    };
    Ok(compare(
        knot,
        representation,
        pipe,
        Some((closed, torsion_closed)),
        rep.relation_residual(),
        None,
        tol,
    ))
}

/// Pipeline versus closed form for one twist-knot representation.
pub fn twist_report(
    params: &TwistRepParams,
    root_index: usize,
    column: Option<usize>,
    tol: f64,
) -> Result<Report> {
    let rep = build_twist_rep(params)?;
    let mut knot = KnotInfo::from_presentation("twist", rep.presentation());
    knot.n = Some(params.n);
    let pipe = run_pipeline(&rep, column)?;
    let dens = TwistDenominators::new(params.x_squared, params.y);
    let closed = if dens.is_singular() {
        None
    } else {
        let delta = twist_delta_closed(params.n, params.x_squared, params.y)?;
        let torsion = twist_torsion_closed(params.n, params.x_squared, params.y)?;
        Some((delta, torsion))
    };
    let representation = RepresentationInfo {
        column: pipe.column + 1,
        images: images_of(&rep),
        torus: None,
        twist: Some(TwistRepInfo {
            s: params.riley_s,
            root_index,
            u: params.u,
            gamma: params.gamma,
            x_squared: params.x_squared,
            y: params.y,
            denominators: [dens.first, dens.second, dens.middle],
            singular: dens.is_singular(),
        }),
    };
    Ok(compare(
        knot,
        representation,
        pipe,
        closed,
        rep.relation_residual(),
        Some(params.riley_residual),
        tol,
    ))
}

/// Which Riley roots to report on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSelector {
    All,
    /// 0-based index into the roots sorted by `(re, im)`.
    Index(usize),
}

/// One report per selected Riley root of `J(2, 2n)` at `s`, in root order.
pub fn twist_reports(
    n: i64,
    s: ComplexScalar,
    roots: RootSelector,
    column: Option<usize>,
    tol: f64,
) -> Result<Vec<Report>> {
    let found = riley_roots(n, s)?;
    let all = &found.roots.roots;
    let indices: Vec<usize> = match roots {
        RootSelector::All => (0..all.len()).collect(),
        RootSelector::Index(i) if i < all.len() => vec![i],
        RootSelector::Index(i) => {
            return Err(Error::InvalidParameters(format!(
                "root index {} out of range ({} roots)",
                i + 1,
                all.len()
            )))
        }
    };
    indices
        .into_iter()
        .map(|i| twist_report(&TwistRepParams::new(n, s, all[i])?, i + 1, column, tol))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::DEFAULT_CONJ_PARAM;

    #[test]
    fn trefoil_torus_report() {
        let params = TorusRepParams::new(2, 3, 1, 1, DEFAULT_CONJ_PARAM).unwrap();
        let r = torus_report(&params, None, 1e-8).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!((r.torsion.unwrap() - Complex64::new(-3.0, 0.0)).norm() < 1e-9);
        let json = r.to_json().unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json().unwrap(), json);
    }

    #[test]
    fn twist_rows() {
        let rows = twist_reports(2, Complex64::new(1.0, 0.0), RootSelector::All, None, 1e-8).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(Report::passed));
        assert_eq!(rows[2].representation.twist.as_ref().unwrap().root_index, 3);
        assert_eq!(rows[0].csv_row().split(',').count(), Report::CSV_HEADER.split(',').count());
        assert!(twist_reports(2, Complex64::new(1.0, 0.0), RootSelector::Index(3), None, 1e-8).is_err());
    }
}
