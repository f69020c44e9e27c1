//! Exact-arithmetic calculus over strongly-regular-graph parameter quadruples:
//! eigenvalues and multiplicities, classical parameters, partial-geometry
//! parameter forms, the clique-number bounds, and the three-way classification
//! verdict.
//!
//! All arithmetic is exact (integers and rationals); verdicts never depend on
//! floating point.

use crate::rat::{frac, perfect_sqrt, rat, Rat};
use serde::Serialize;
use thiserror::Error;

/// Inputs larger than this would push intermediate products past i128.
const MAX_PARAM: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("parameter {0} exceeds the supported range (2^32)")]
    TooLarge(&'static str),
    #[error("primitivity requires 0 < k < v-1, got v={v}, k={k}")]
    NotPrimitive { v: u64, k: u64 },
    #[error("lambda <= k-1 is required, got k={k}, lambda={lambda}")]
    LambdaRange { k: u64, lambda: u64 },
    #[error("1 <= mu <= k is required, got k={k}, mu={mu}")]
    MuRange { k: u64, mu: u64 },
    #[error("counting identity (v-k-1)*mu = k*(k-lambda-1) fails: {lhs} != {rhs}")]
    CountingIdentity { lhs: i128, rhs: i128 },
    #[error("irrational eigenvalues on non-conference parameters")]
    NonIntegralNonConference,
    #[error("eigenvalue multiplicities must be non-negative integers: {detail}")]
    NonIntegralMultiplicity { detail: String },
    #[error("conference graph with irrational eigenvalues has no classical parameters under the negative-eigenvalue convention")]
    ConferenceGraph,
    #[error("classical triple does not define an integral parameter set: {detail}")]
    NonIntegralParameters { detail: String },
}

/// The standard parameter quadruple `srg(v, k, lambda, mu)`.
///
/// Construction enforces primitivity (`0 < k < v-1`), the range constraints
/// `lambda <= k-1` and `1 <= mu <= k`, and the exact counting identity
/// `(v-k-1)*mu = k*(k-lambda-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct StandardParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl StandardParams {
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self, ParamsError> {
        for (name, value) in [("v", v), ("k", k), ("lambda", lambda), ("mu", mu)] {
            if value > MAX_PARAM {
                return Err(ParamsError::TooLarge(name));
            }
        }
        if k == 0 || k + 1 >= v {
            return Err(ParamsError::NotPrimitive { v, k });
        }
        if lambda + 1 > k {
            return Err(ParamsError::LambdaRange { k, lambda });
        }
        if mu == 0 || mu > k {
            return Err(ParamsError::MuRange { k, mu });
        }
        let (vi, ki, li, mi) = (v as i128, k as i128, lambda as i128, mu as i128);
        let lhs = (vi - ki - 1) * mi;
        let rhs = ki * (ki - li - 1);
        if lhs != rhs {
            return Err(ParamsError::CountingIdentity { lhs, rhs });
        }
        Ok(Self { v, k, lambda, mu })
    }

    /// True exactly when the quadruple matches the conference family
    /// `(4t+1, 2t, t-1, t)`.
    pub fn is_conference(&self) -> bool {
        let t = self.mu;
        self.v == 4 * t + 1 && self.k == 2 * t && self.lambda + 1 == t
    }

    fn as_i128(&self) -> (i128, i128, i128, i128) {
        (
            self.v as i128,
            self.k as i128,
            self.lambda as i128,
            self.mu as i128,
        )
    }
}

impl std::fmt::Display for StandardParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// An exact eigenvalue: either an integer or the conference surd `(p ± sqrt(d))/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eigenvalue {
    Integer(i128),
    /// `(p + sqrt(d))/2` when `positive_root`, else `(p - sqrt(d))/2`.
    Surd {
        p: i128,
        d: i128,
        positive_root: bool,
    },
}

impl std::fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Eigenvalue::Integer(n) => write!(f, "{n}"),
            Eigenvalue::Surd {
                p,
                d,
                positive_root,
            } => {
                let sign = if *positive_root { '+' } else { '-' };
                write!(f, "({p}{sign}sqrt({d}))/2")
            }
        }
    }
}

/// Exact spectral data of a parameter quadruple: the two nontrivial
/// eigenvalues, `m = -theta2` when integral, and the multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigendata {
    pub theta1: Eigenvalue,
    pub theta2: Eigenvalue,
    /// `-theta2` when the eigenvalues are integers; absent for irrational
    /// conference spectra.
    pub m: Option<u64>,
    pub f_mult: u64,
    pub g_mult: u64,
    pub conference: bool,
}

/// The two nontrivial eigenvalues are the roots of
/// `x^2 - (lambda - mu) x - (k - mu) = 0`; multiplicities come from the
/// trace equations `f + g = v - 1` and `k + f*theta1 + g*theta2 = 0`.
pub fn eigendata(sp: &StandardParams) -> Result<Eigendata, ParamsError> {
    let (v, k, lambda, mu) = sp.as_i128();
    let trace_diff = lambda - mu;
    let disc = trace_diff * trace_diff + 4 * (k - mu);
    let conference = sp.is_conference();
    if let Some(s) = perfect_sqrt(disc) {
        let theta1 = (trace_diff + s) / 2;
        let theta2 = (trace_diff - s) / 2;
        debug_assert_eq!((trace_diff + s) % 2, 0);
        debug_assert!(theta2 < 0);
        let numer = 2 * k + (v - 1) * trace_diff;
        if numer % s != 0 {
            return Err(ParamsError::NonIntegralMultiplicity {
                detail: format!("(2k + (v-1)(lambda-mu))/(theta1-theta2) = {numer}/{s}"),
            });
        }
        let q = numer / s;
        let f2 = (v - 1) - q;
        let g2 = (v - 1) + q;
        if f2 % 2 != 0 || f2 < 0 || g2 < 0 {
            return Err(ParamsError::NonIntegralMultiplicity {
                detail: format!("f = {f2}/2, g = {g2}/2"),
            });
        }
        let (f_mult, g_mult) = (f2 / 2, g2 / 2);
        debug_assert_eq!(k + f_mult * theta1 + g_mult * theta2, 0);
        Ok(Eigendata {
            theta1: Eigenvalue::Integer(theta1),
            theta2: Eigenvalue::Integer(theta2),
            m: Some((-theta2) as u64),
            f_mult: f_mult as u64,
            g_mult: g_mult as u64,
            conference,
        })
    } else if conference {
        // lambda - mu = -1 and the discriminant equals v.
        debug_assert_eq!(disc, v);
        let half = ((v - 1) / 2) as u64;
        Ok(Eigendata {
            theta1: Eigenvalue::Surd {
                p: -1,
                d: v,
                positive_root: true,
            },
            theta2: Eigenvalue::Surd {
                p: -1,
                d: v,
                positive_root: false,
            },
            m: None,
            f_mult: half,
            g_mult: half,
            conference: true,
        })
    } else {
        Err(ParamsError::NonIntegralNonConference)
    }
}

/// The classical parameter triple `(b, alpha, beta)`, exact rationals, under
/// the convention that `r = theta2` is the negative eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalParams {
    pub b: Rat,
    pub alpha: Rat,
    pub beta: Rat,
}

impl ClassicalParams {
    pub fn new(b: Rat, alpha: Rat, beta: Rat) -> Self {
        Self { b, alpha, beta }
    }

    pub fn from_integers(b: i128, alpha: i128, beta: i128) -> Self {
        Self::new(rat(b), rat(alpha), rat(beta))
    }

    /// `mu = (alpha + 1)(b + 1)` as an exact rational.
    pub fn mu(&self) -> Rat {
        (self.alpha + rat(1)) * (self.b + rat(1))
    }
}

impl std::fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.b, self.alpha, self.beta)
    }
}

/// `b = -r-1, alpha = -mu/r - 1, beta = -k/r` with `r = theta2 < -1`.
///
/// Fails with `ConferenceGraph` exactly when the eigenvalues are irrational
/// (which only conference graphs are allowed); conference-patterned
/// quadruples with integral eigenvalues convert fine, which the round-trip
/// law `from_classical(to_classical(sp)) = sp` relies on.
pub fn to_classical(sp: &StandardParams) -> Result<ClassicalParams, ParamsError> {
    let ed = eigendata(sp)?;
    let m = ed.m.ok_or(ParamsError::ConferenceGraph)? as i128;
    let (_, k, _, mu) = sp.as_i128();
    Ok(ClassicalParams {
        b: rat(m - 1),
        alpha: frac(mu, m) - rat(1),
        beta: frac(k, m),
    })
}

/// Inverts `to_classical`: `v = 1 + (b+1)beta + b*beta*(beta-alpha)/(alpha+1)`,
/// `k = (b+1)beta`, `lambda = beta + alpha*b - 1`, `mu = (alpha+1)(b+1)`.
pub fn from_classical(cp: &ClassicalParams) -> Result<StandardParams, ParamsError> {
    let one = rat(1);
    let alpha1 = cp.alpha + one;
    if alpha1 == rat(0) {
        return Err(ParamsError::NonIntegralParameters {
            detail: "alpha = -1 makes v undefined".into(),
        });
    }
    let k = (cp.b + one) * cp.beta;
    let lambda = cp.beta + cp.alpha * cp.b - one;
    let mu = alpha1 * (cp.b + one);
    let v = one + k + cp.b * cp.beta * (cp.beta - cp.alpha) / alpha1;
    let as_nonneg_int = |r: &Rat, name: &str| -> Result<u64, ParamsError> {
        if !r.is_integer() || r < &rat(0) {
            return Err(ParamsError::NonIntegralParameters {
                detail: format!("{name} = {r}"),
            });
        }
        u64::try_from(r.to_integer()).map_err(|_| ParamsError::NonIntegralParameters {
            detail: format!("{name} = {r}"),
        })
    };
    StandardParams::new(
        as_nonneg_int(&v, "v")?,
        as_nonneg_int(&k, "k")?,
        as_nonneg_int(&lambda, "lambda")?,
        as_nonneg_int(&mu, "mu")?,
    )
}

/// Neumaier's bound `f(m, mu) = m(m-1)(mu+1)/2 + mu - m - 1`.
pub fn neumaier_bound(m: u64, mu: u64) -> Rat {
    assert!(m >= 1 && mu >= 1);
    let (m, mu) = (m as i128, mu as i128);
    frac(m * (m - 1) * (mu + 1), 2) + rat(mu - m - 1)
}

/// The improved bound `f(m, mu) = 8m(mu-1)/3 - 2mu/3 + 3m - 10/3`.
pub fn improved_bound(m: u64, mu: u64) -> Rat {
    assert!(m >= 1 && mu >= 1);
    let (m, mu) = (m as i128, mu as i128);
    frac(8 * m * (mu - 1) - 2 * mu + 9 * m - 10, 3)
}

/// Upper bound `(2m-3) m^3` on `mu` for smallest eigenvalue `-m`, `m >= 2`.
pub fn mu_upper_bound(m: u64) -> i128 {
    assert!(m >= 2, "the mu bound applies only for m >= 2");
    let m = m as i128;
    (2 * m - 3) * m * m * m
}

/// Partial geometry parameters `pg(K, R, T)`: `K` points per line, `R` lines
/// per point, `T` transversal lines from an external point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PgParams {
    /// K: points per line.
    pub points_per_line: u64,
    /// R: lines per point.
    pub lines_per_point: u64,
    /// T: lines through an external point meeting a given line.
    pub transversals: u64,
}

impl PgParams {
    pub fn new(points_per_line: u64, lines_per_point: u64, transversals: u64) -> Self {
        assert!(points_per_line >= 2 && lines_per_point >= 2);
        assert!(transversals >= 1);
        assert!(transversals <= lines_per_point && transversals <= points_per_line);
        Self {
            points_per_line,
            lines_per_point,
            transversals,
        }
    }
}

impl std::fmt::Display for PgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "pg({},{},{})",
            self.points_per_line, self.lines_per_point, self.transversals
        )
    }
}

/// Standard parameters of the point graph of a `pg(K, R, T)`:
/// `srg(K + K(K-1)(R-1)/T, R(K-1), (R-1)(T-1) + K - 2, RT)`.
pub fn pg_point_graph_params(pg: &PgParams) -> Result<StandardParams, ParamsError> {
    let (kk, rr, tt) = (
        pg.points_per_line as i128,
        pg.lines_per_point as i128,
        pg.transversals as i128,
    );
    let numer = kk * (kk - 1) * (rr - 1);
    if numer % tt != 0 {
        return Err(ParamsError::NonIntegralParameters {
            detail: format!("K(K-1)(R-1)/T = {numer}/{tt}"),
        });
    }
    let v = kk + numer / tt;
    let k = rr * (kk - 1);
    let lambda = (rr - 1) * (tt - 1) + kk - 2;
    let mu = rr * tt;
    StandardParams::new(v as u64, k as u64, lambda as u64, mu as u64)
}

/// Recovers `pg(K, R, T)` from a quadruple with integral smallest eigenvalue
/// `-m`: present iff `k/m` is an integer and `mu <= m^2`, in which case
/// `R = m, K = k/m + 1, T = mu/m`.
pub fn has_geometric_parameters(sp: &StandardParams) -> Option<PgParams> {
    let ed = eigendata(sp).ok()?;
    let m = ed.m?;
    if !sp.k.is_multiple_of(m) || sp.mu > m * m {
        return None;
    }
    // m | k together with integral eigenvalues forces m | mu.
    debug_assert_eq!(sp.mu % m, 0);
    if !sp.mu.is_multiple_of(m) {
        return None;
    }
    let pg = PgParams::new(sp.k / m + 1, m, sp.mu / m);
    debug_assert_eq!(pg_point_graph_params(&pg).ok(), Some(*sp));
    Some(pg)
}

/// Which of the two pg feasibility inequalities failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PgInfeasibility {
    /// `T <= R-2` but `K-1 > (R-T)^2 (2T-1)`.
    Primal { lhs: i128, rhs: i128 },
    /// `T <= K-2` but `R-1 > (K-T)^2 (2T-1)` (the dual form).
    Dual { lhs: i128, rhs: i128 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PgFeasibility {
    pub feasible: bool,
    pub violation: Option<PgInfeasibility>,
}

/// Checks `K-1 <= (R-T)^2 (2T-1)` when `T <= R-2`, and the dual inequality
/// with `K` and `R` interchanged when `T <= K-2`.
pub fn pg_feasible(pg: &PgParams) -> PgFeasibility {
    let (kk, rr, tt) = (
        pg.points_per_line as i128,
        pg.lines_per_point as i128,
        pg.transversals as i128,
    );
    if tt <= rr - 2 {
        let (lhs, rhs) = (kk - 1, (rr - tt) * (rr - tt) * (2 * tt - 1));
        if lhs > rhs {
            return PgFeasibility {
                feasible: false,
                violation: Some(PgInfeasibility::Primal { lhs, rhs }),
            };
        }
    }
    if tt <= kk - 2 {
        let (lhs, rhs) = (rr - 1, (kk - tt) * (kk - tt) * (2 * tt - 1));
        if lhs > rhs {
            return PgFeasibility {
                feasible: false,
                violation: Some(PgInfeasibility::Dual { lhs, rhs }),
            };
        }
    }
    PgFeasibility {
        feasible: true,
        violation: None,
    }
}

/// Metsch's two sufficient conditions for the line system at width `sigma`:
/// `(sigma+1)(lambda+1) - k > (mu-1) C(sigma+1, 2)` and
/// `lambda + 1 > (mu-1)(2 sigma - 1)`.
pub fn metsch_conditions(sp: &StandardParams, sigma: u64) -> bool {
    assert!(sigma >= 1);
    let (_, k, lambda, mu) = sp.as_i128();
    let s = sigma as i128;
    let cond1 = (s + 1) * (lambda + 1) - k > (mu - 1) * s * (s + 1) / 2;
    let cond2 = lambda + 1 > (mu - 1) * (2 * s - 1);
    cond1 && cond2
}

fn classical_pre(cp: &ClassicalParams, min_b: i128) -> (Rat, Rat, Rat) {
    assert!(
        cp.b.is_integer() && cp.b >= rat(min_b),
        "requires integer b >= {min_b}, got b = {}",
        cp.b
    );
    assert!(
        cp.mu() >= rat(2),
        "requires mu = (alpha+1)(b+1) >= 2, got mu = {}",
        cp.mu()
    );
    let s = cp.b * cp.alpha + cp.b + cp.alpha;
    (cp.b, cp.alpha, s)
}

/// Threshold of the SPLS theorem: true iff
/// `beta > max{ 8(b+1)s/3 - 2s/3 - 4*b*alpha, 8(b+1)s/3 - 5s/3 - b*alpha }`
/// where `s = b*alpha + b + alpha`, in which case the graph has the
/// SPLS(ceil((4b+1)/3)) property.
pub fn spls_threshold_ok(cp: &ClassicalParams) -> bool {
    let (b, alpha, s) = classical_pre(cp, 1);
    let common = frac(8, 3) * (b + rat(1)) * s;
    let t1 = common - frac(2, 3) * s - rat(4) * b * alpha;
    let t2 = common - frac(5, 3) * s - b * alpha;
    cp.beta > t1.max(t2)
}

/// Threshold of the geometricity theorem: `beta >= 5b(b*alpha + b + alpha)/2`.
pub fn geometric_threshold_ok(cp: &ClassicalParams) -> bool {
    let (b, _, s) = classical_pre(cp, 2);
    cp.beta >= frac(5, 2) * b * s
}

/// Why a quadruple is infeasible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "code", content = "detail")]
pub enum InfeasibilityReason {
    InvalidParameters(String),
    IrrationalNonConference,
    NonIntegralMultiplicity(String),
    MuExceedsBound { mu: u64, bound: i128 },
    Mu1Obstruction { lhs: i128, k: u64 },
    ExceedsBoundNotGeometric,
}

impl std::fmt::Display for InfeasibilityReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InfeasibilityReason::InvalidParameters(s) => write!(f, "{s}"),
            InfeasibilityReason::IrrationalNonConference => {
                write!(f, "irrational eigenvalues on non-conference parameters")
            }
            InfeasibilityReason::NonIntegralMultiplicity(s) => {
                write!(f, "non-integral multiplicities: {s}")
            }
            InfeasibilityReason::MuExceedsBound { mu, bound } => {
                write!(f, "mu = {mu} exceeds the (2m-3)m^3 bound {bound}")
            }
            InfeasibilityReason::Mu1Obstruction { lhs, k } => {
                write!(
                    f,
                    "mu = 1 requires (lambda+1)(lambda+2) <= k, got {lhs} > {k}"
                )
            }
            InfeasibilityReason::ExceedsBoundNotGeometric => {
                write!(
                    f,
                    "lambda exceeds the improved bound while mu is neither m(m-1) nor m^2"
                )
            }
        }
    }
}

/// The two bound values at `(m, mu)` and whether `lambda` exceeds each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub neumaier: Rat,
    pub improved: Rat,
    pub exceeds_neumaier: bool,
    pub exceeds_improved: bool,
}

/// Outcome of the classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictKind {
    Infeasible(InfeasibilityReason),
    Conference,
    /// `m <= 2`: outside the theorem's scope (those graphs are classified
    /// elsewhere).
    SmallM,
    /// `mu = m(m-1)` and `lambda` exceeds the improved bound: forced to be the
    /// Latin square graph `LS_m(n)` with `n = lambda - m(m-3)`.
    ForcedLatinSquareGeometric {
        ls_order: u64,
    },
    /// `mu = m^2` and `lambda` exceeds the improved bound: forced to be the
    /// block graph of a 2-(points, m, 1) design.
    ForcedSteinerGeometric {
        design_points: u64,
    },
    WithinBound,
}

impl VerdictKind {
    pub fn name(&self) -> &'static str {
        match self {
            VerdictKind::Infeasible(_) => "infeasible",
            VerdictKind::Conference => "conference",
            VerdictKind::SmallM => "small_m",
            VerdictKind::ForcedLatinSquareGeometric { .. } => "forced_latin_square_geometric",
            VerdictKind::ForcedSteinerGeometric { .. } => "forced_steiner_geometric",
            VerdictKind::WithinBound => "within_bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// Present whenever the smallest eigenvalue is an integer `-m` (the
    /// bounds are functions of `m` and `mu`).
    pub bounds: Option<BoundsReport>,
}

fn bounds_report(m: u64, mu: u64, lambda: u64) -> BoundsReport {
    let neumaier = neumaier_bound(m, mu);
    let improved = improved_bound(m, mu);
    let l = rat(lambda as i128);
    BoundsReport {
        exceeds_neumaier: l > neumaier,
        exceeds_improved: l > improved,
        neumaier,
        improved,
    }
}

/// Full classification pipeline: eigendata, conference and small-`m` gates,
/// the `mu` bound, the `mu = 1` obstruction, then the improved-bound
/// trichotomy (forced Latin square / forced Steiner / within bound).
pub fn classify(sp: &StandardParams) -> Verdict {
    let ed = match eigendata(sp) {
        Ok(ed) => ed,
        Err(ParamsError::NonIntegralNonConference) => {
            return Verdict {
                kind: VerdictKind::Infeasible(InfeasibilityReason::IrrationalNonConference),
                bounds: None,
            }
        }
        Err(ParamsError::NonIntegralMultiplicity { detail }) => {
            return Verdict {
                kind: VerdictKind::Infeasible(InfeasibilityReason::NonIntegralMultiplicity(detail)),
                bounds: None,
            }
        }
        Err(e) => {
            return Verdict {
                kind: VerdictKind::Infeasible(InfeasibilityReason::InvalidParameters(
                    e.to_string(),
                )),
                bounds: None,
            }
        }
    };
    let bounds = ed.m.map(|m| bounds_report(m, sp.mu, sp.lambda));
    if ed.conference {
        return Verdict {
            kind: VerdictKind::Conference,
            bounds,
        };
    }
    let m = ed.m.expect("non-conference spectra are integral");
    if m <= 2 {
        return Verdict {
            kind: VerdictKind::SmallM,
            bounds,
        };
    }
    let mu_cap = mu_upper_bound(m);
    if (sp.mu as i128) > mu_cap {
        return Verdict {
            kind: VerdictKind::Infeasible(InfeasibilityReason::MuExceedsBound {
                mu: sp.mu,
                bound: mu_cap,
            }),
            bounds,
        };
    }
    if sp.mu == 1 {
        let lhs = (sp.lambda as i128 + 1) * (sp.lambda as i128 + 2);
        if lhs > sp.k as i128 {
            return Verdict {
                kind: VerdictKind::Infeasible(InfeasibilityReason::Mu1Obstruction { lhs, k: sp.k }),
                bounds,
            };
        }
    }
    let report = bounds.as_ref().expect("m is integral here");
    let mi = m as i128;
    let kind = if report.exceeds_improved {
        if sp.mu as i128 == mi * (mi - 1) {
            let ls_order = sp.lambda as i128 - mi * (mi - 3);
            VerdictKind::ForcedLatinSquareGeometric {
                ls_order: u64::try_from(ls_order).expect("forced LS branch has positive order"),
            }
        } else if sp.mu as i128 == mi * mi {
            let (m, l) = (mi, sp.lambda as i128);
            let points = l * (m - 1) - m * (m - 1) * (m - 2) + m;
            VerdictKind::ForcedSteinerGeometric {
                design_points: u64::try_from(points)
                    .expect("forced Steiner branch has positive point count"),
            }
        } else {
            VerdictKind::Infeasible(InfeasibilityReason::ExceedsBoundNotGeometric)
        }
    } else {
        VerdictKind::WithinBound
    };
    Verdict { kind, bounds }
}

/// Classifies a raw quadruple, folding construction failures into an
/// `Infeasible` verdict (a malformed parameter set is a verdict, not an
/// error).
pub fn classify_quadruple(v: u64, k: u64, lambda: u64, mu: u64) -> Verdict {
    match StandardParams::new(v, k, lambda, mu) {
        Ok(sp) => classify(&sp),
        Err(e) => Verdict {
            kind: VerdictKind::Infeasible(InfeasibilityReason::InvalidParameters(e.to_string())),
            bounds: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: u64, k: u64, l: u64, m: u64) -> StandardParams {
        StandardParams::new(v, k, l, m).unwrap()
    }

    #[test]
    fn rejects_invalid_quadruples() {
        assert!(matches!(
            StandardParams::new(10, 9, 0, 1),
            Err(ParamsError::NotPrimitive { .. })
        ));
        assert!(matches!(
            StandardParams::new(10, 3, 3, 1),
            Err(ParamsError::LambdaRange { .. })
        ));
        assert!(matches!(
            StandardParams::new(10, 3, 0, 0),
            Err(ParamsError::MuRange { .. })
        ));
        assert!(matches!(
            StandardParams::new(10, 3, 0, 2),
            Err(ParamsError::CountingIdentity { .. })
        ));
    }

    #[test]
    fn eigendata_clebsch() {
        let ed = eigendata(&sp(16, 5, 0, 2)).unwrap();
        assert_eq!(ed.theta1, Eigenvalue::Integer(1));
        assert_eq!(ed.theta2, Eigenvalue::Integer(-3));
        assert_eq!(ed.m, Some(3));
        assert_eq!((ed.f_mult, ed.g_mult), (10, 5));
        assert!(!ed.conference);
    }

    #[test]
    fn eigendata_petersen() {
        let ed = eigendata(&sp(10, 3, 0, 1)).unwrap();
        assert_eq!(ed.theta1, Eigenvalue::Integer(1));
        assert_eq!(ed.theta2, Eigenvalue::Integer(-2));
        assert_eq!(ed.m, Some(2));
        assert_eq!((ed.f_mult, ed.g_mult), (5, 4));
    }

    #[test]
    fn eigendata_paley13() {
        let ed = eigendata(&sp(13, 6, 2, 3)).unwrap();
        assert!(ed.conference);
        assert_eq!(ed.m, None);
        assert_eq!((ed.f_mult, ed.g_mult), (6, 6));
        assert_eq!(ed.theta1.to_string(), "(-1+sqrt(13))/2");
        assert_eq!(ed.theta2.to_string(), "(-1-sqrt(13))/2");
    }

    #[test]
    fn eigendata_conference_pattern_with_integral_spectrum() {
        // (25,12,5,6) matches (4t+1,2t,t-1,t) at t=6 yet has integral
        // eigenvalues 2 and -3 because 25 is a square.
        let ed = eigendata(&sp(25, 12, 5, 6)).unwrap();
        assert!(ed.conference);
        assert_eq!(ed.m, Some(3));
        assert_eq!(ed.theta1, Eigenvalue::Integer(2));
    }

    #[test]
    fn classical_round_trips() {
        let clebsch = sp(16, 5, 0, 2);
        let cp = to_classical(&clebsch).unwrap();
        assert_eq!(cp.b, rat(2));
        assert_eq!(cp.alpha, frac(-1, 3));
        assert_eq!(cp.beta, frac(5, 3));
        assert_eq!(from_classical(&cp).unwrap(), clebsch);

        let cp = to_classical(&sp(10, 3, 0, 1)).unwrap();
        assert_eq!((cp.b, cp.alpha, cp.beta), (rat(1), frac(-1, 2), frac(3, 2)));

        let cp = to_classical(&sp(25, 8, 3, 2)).unwrap();
        assert_eq!((cp.b, cp.alpha, cp.beta), (rat(1), rat(0), rat(4)));
        assert_eq!(from_classical(&cp).unwrap(), sp(25, 8, 3, 2));
    }

    #[test]
    fn from_classical_examples() {
        let ls35 = from_classical(&ClassicalParams::from_integers(2, 1, 4)).unwrap();
        assert_eq!(ls35, sp(25, 12, 5, 6));
        assert!(to_classical(&ls35).is_ok());
        assert!(from_classical(&ClassicalParams::new(rat(2), rat(2), frac(42, 5))).is_err());
    }

    #[test]
    fn to_classical_rejects_irrational_conference() {
        assert_eq!(
            to_classical(&sp(13, 6, 2, 3)),
            Err(ParamsError::ConferenceGraph)
        );
    }

    #[test]
    fn bound_values() {
        assert_eq!(neumaier_bound(3, 6), rat(23));
        assert_eq!(neumaier_bound(6, 30), rat(488));
        assert_eq!(neumaier_bound(1, 1), rat(-1));
        assert_eq!(improved_bound(6, 30), frac(1376, 3));
        assert_eq!(improved_bound(3, 6), frac(125, 3));
        for m in 1..40 {
            assert_eq!(improved_bound(m, 1), rat(3 * m as i128 - 4));
        }
        assert_eq!(neumaier_bound(4, 1), improved_bound(4, 1));
    }

    #[test]
    fn mu_bound_values() {
        assert_eq!(mu_upper_bound(2), 8);
        assert_eq!(mu_upper_bound(3), 81);
        assert_eq!(mu_upper_bound(5), 875);
    }

    #[test]
    fn geometric_parameter_recovery() {
        let pg = has_geometric_parameters(&sp(25, 8, 3, 2)).unwrap();
        assert_eq!(
            (pg.points_per_line, pg.lines_per_point, pg.transversals),
            (5, 2, 1)
        );
        let pg = has_geometric_parameters(&sp(10, 6, 3, 4)).unwrap();
        assert_eq!(
            (pg.points_per_line, pg.lines_per_point, pg.transversals),
            (4, 2, 2)
        );
        assert!(has_geometric_parameters(&sp(10, 3, 0, 1)).is_none());
        assert!(has_geometric_parameters(&sp(13, 6, 2, 3)).is_none());
    }

    #[test]
    fn pg_feasibility_checks() {
        assert!(pg_feasible(&PgParams::new(5, 2, 1)).feasible);
        assert!(pg_feasible(&PgParams::new(4, 2, 2)).feasible);
        let bad = pg_feasible(&PgParams::new(200, 5, 2));
        assert!(!bad.feasible);
        assert_eq!(
            bad.violation,
            Some(PgInfeasibility::Primal { lhs: 199, rhs: 27 })
        );
    }

    #[test]
    fn metsch_condition_examples() {
        assert!(metsch_conditions(&sp(25, 8, 3, 2), 2));
        assert!(!metsch_conditions(&sp(10, 3, 0, 1), 1));
        // mu = 1 with (lambda+1)(lambda+2) > k satisfies Metsch at
        // sigma = lambda + 1.
        let p = sp(209, 16, 3, 1);
        assert!((p.lambda + 1) * (p.lambda + 2) > p.k);
        assert!(metsch_conditions(&p, p.lambda + 1));
    }

    #[test]
    fn spls_threshold_examples() {
        assert!(spls_threshold_ok(&ClassicalParams::from_integers(2, 0, 17)));
        assert!(!spls_threshold_ok(&ClassicalParams::from_integers(2, 0, 9)));
        assert!(!spls_threshold_ok(&ClassicalParams::from_integers(2, 0, 8)));
        assert!(spls_threshold_ok(&ClassicalParams::from_integers(
            1, 0, 100
        )));
        assert!(!spls_threshold_ok(&ClassicalParams::from_integers(1, 0, 4)));
    }

    #[test]
    fn geometric_threshold_examples() {
        assert!(geometric_threshold_ok(&ClassicalParams::from_integers(
            2, 0, 10
        )));
        assert!(!geometric_threshold_ok(&ClassicalParams::from_integers(
            2, 0, 9
        )));
        assert!(geometric_threshold_ok(&ClassicalParams::from_integers(
            2, 1, 25
        )));
    }

    #[test]
    fn classify_forced_latin_square() {
        let verdict = classify(&sp(1849, 126, 43, 6));
        assert_eq!(
            verdict.kind,
            VerdictKind::ForcedLatinSquareGeometric { ls_order: 43 }
        );
        let bounds = verdict.bounds.unwrap();
        assert_eq!(bounds.improved, frac(125, 3));
        assert!(bounds.exceeds_improved);
    }

    #[test]
    fn classify_conference_and_small_m() {
        assert_eq!(classify(&sp(13, 6, 2, 3)).kind, VerdictKind::Conference);
        assert!(classify(&sp(13, 6, 2, 3)).bounds.is_none());
        assert_eq!(classify(&sp(10, 3, 0, 1)).kind, VerdictKind::SmallM);
        assert_eq!(classify(&sp(25, 12, 5, 6)).kind, VerdictKind::Conference);
        assert!(classify(&sp(25, 12, 5, 6)).bounds.is_some());
    }

    #[test]
    fn classify_exceeds_bound_not_geometric() {
        // Valid eigendata (f,g) = (220,1859), m = 3, mu = 2, lambda = 24
        // exceeds both bounds while mu is neither m(m-1) nor m^2.
        let verdict = classify(&sp(2080, 77, 24, 2));
        assert_eq!(
            verdict.kind,
            VerdictKind::Infeasible(InfeasibilityReason::ExceedsBoundNotGeometric)
        );
        assert!(verdict.bounds.unwrap().exceeds_neumaier);
    }

    #[test]
    fn classify_mu1_obstruction() {
        let verdict = classify(&sp(209, 16, 3, 1));
        assert_eq!(
            verdict.kind,
            VerdictKind::Infeasible(InfeasibilityReason::Mu1Obstruction { lhs: 20, k: 16 })
        );
    }

    #[test]
    fn classify_mu_exceeds_bound() {
        // Integral spectrum (theta = 7, -3; f = 27, g = 98) but mu = 84
        // exceeds (2m-3)m^3 = 81 at m = 3.
        let verdict = classify(&sp(126, 105, 88, 84));
        assert_eq!(
            verdict.kind,
            VerdictKind::Infeasible(InfeasibilityReason::MuExceedsBound { mu: 84, bound: 81 })
        );
    }

    #[test]
    fn classify_within_bound() {
        assert_eq!(classify(&sp(16, 5, 0, 2)).kind, VerdictKind::WithinBound);
    }

    #[test]
    fn classify_quadruple_folds_construction_errors() {
        let verdict = classify_quadruple(1849, 126, 41, 6);
        assert!(matches!(
            verdict.kind,
            VerdictKind::Infeasible(InfeasibilityReason::InvalidParameters(_))
        ));
    }

    #[test]
    fn steiner_branch_reports_design() {
        // pg(63,3,3) is the Steiner triple system on 127 points: mu = 9 = m^2
        // at m = 3 and lambda = 65 exceeds improved_bound(3,9) = 191/3.
        let pg = PgParams::new(63, 3, 3);
        let p = pg_point_graph_params(&pg).unwrap();
        assert_eq!(p, sp(2667, 186, 65, 9));
        match classify(&p).kind {
            VerdictKind::ForcedSteinerGeometric { design_points } => {
                assert_eq!(design_points, 127);
                // 2-(127,3,1) has 127*126/6 = 2667 blocks, the vertex count.
                assert_eq!(127 * 126 / 6, p.v);
            }
            other => panic!("expected forced Steiner, got {other:?}"),
        }
    }
}
